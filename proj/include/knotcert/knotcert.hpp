#pragma once

#include "knotcert/braid.hpp"
#include "knotcert/burau.hpp"
#include "knotcert/certify.hpp"
#include "knotcert/diagram.hpp"
#include "knotcert/error.hpp"
#include "knotcert/homfly.hpp"
#include "knotcert/invariants.hpp"
#include "knotcert/laurent.hpp"
#include "knotcert/linalg.hpp"
