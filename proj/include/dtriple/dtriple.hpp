#pragma once

#include "dtriple/algebra.hpp"
#include "dtriple/classify.hpp"
#include "dtriple/enumerate.hpp"
#include "dtriple/nabla.hpp"
#include "dtriple/order.hpp"
#include "dtriple/rational.hpp"
#include "dtriple/report.hpp"
#include "dtriple/table_io.hpp"
#include "dtriple/verify.hpp"
