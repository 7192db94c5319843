#pragma once

#include "bijection.hpp"
#include "bumpless.hpp"
#include "errors.hpp"
#include "io.hpp"
#include "monk.hpp"
#include "permutation.hpp"
#include "pipe_dream.hpp"
#include "polynomial.hpp"
#include "schubert_poly.hpp"
#include "verify.hpp"
