#ifndef WEIERLAB_WEIERLAB_HPP
#define WEIERLAB_WEIERLAB_HPP

#include "weierlab/complex_io.hpp"
#include "weierlab/errors.hpp"
#include "weierlab/lattice.hpp"
#include "weierlab/modular.hpp"
#include "weierlab/theta_sigma.hpp"
#include "weierlab/verify.hpp"
#include "weierlab/weierstrass.hpp"

#endif
