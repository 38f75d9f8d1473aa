#ifndef MEANDERKIT_MEANDERKIT_HPP
#define MEANDERKIT_MEANDERKIT_HPP

#include <meanderkit/conjecture_lab.hpp>
#include <meanderkit/diagram.hpp>
#include <meanderkit/enumeration.hpp>
#include <meanderkit/errors.hpp>
#include <meanderkit/formulas.hpp>
#include <meanderkit/json_io.hpp>
#include <meanderkit/lie_oracle.hpp>
#include <meanderkit/linalg.hpp>
#include <meanderkit/meander.hpp>
#include <meanderkit/spectrum.hpp>
#include <meanderkit/winding.hpp>

#endif // MEANDERKIT_MEANDERKIT_HPP
