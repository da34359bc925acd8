#pragma once

#include "binary_forms.hpp"
#include "enumeration.hpp"
#include "multi_index.hpp"
#include "rational.hpp"
#include "sign_classifiers.hpp"
#include "simplex_oracle.hpp"
#include "sym_tensor.hpp"
#include "tensor_io.hpp"
#include "univariate.hpp"
#include "verdict.hpp"
