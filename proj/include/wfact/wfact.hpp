#pragma once

#include "wfact/errors.hpp"
#include "wfact/numtheory.hpp"
#include "wfact/laurent.hpp"
#include "wfact/roots.hpp"
#include "wfact/group.hpp"
#include "wfact/partitions.hpp"
#include "wfact/symmetric_series.hpp"
#include "wfact/cyclic_series.hpp"
#include "wfact/hurwitz.hpp"
#include "wfact/assembly.hpp"
#include "wfact/oracle.hpp"
#include "wfact/serialization.hpp"
#include "wfact/fixtures.hpp"
