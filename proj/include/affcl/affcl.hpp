#pragma once

#include "affcl/abelian_group.hpp"
#include "affcl/catalog.hpp"
#include "affcl/cone.hpp"
#include "affcl/errors.hpp"
#include "affcl/feasibility.hpp"
#include "affcl/hyperbola.hpp"
#include "affcl/integer.hpp"
#include "affcl/integer_system.hpp"
#include "affcl/matrix.hpp"
#include "affcl/monoid.hpp"
#include "affcl/normal_form.hpp"
#include "affcl/oracle.hpp"
