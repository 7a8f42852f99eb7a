#pragma once

#include "slidekit/backstable.hpp"
#include "slidekit/core.hpp"
#include "slidekit/errors.hpp"
#include "slidekit/expansion.hpp"
#include "slidekit/forest.hpp"
#include "slidekit/kostka.hpp"
#include "slidekit/poly.hpp"
#include "slidekit/poset.hpp"
#include "slidekit/slide.hpp"
