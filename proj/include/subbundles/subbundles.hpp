#pragma once

// Umbrella header.

#include "subbundles/cli.hpp"           // IWYU pragma: export
#include "subbundles/closed_forms.hpp"  // IWYU pragma: export
#include "subbundles/count.hpp"         // IWYU pragma: export
#include "subbundles/counting.hpp"      // IWYU pragma: export
#include "subbundles/degeneration.hpp"  // IWYU pragma: export
#include "subbundles/errors.hpp"        // IWYU pragma: export
#include "subbundles/invariants.hpp"    // IWYU pragma: export
#include "subbundles/recurrence.hpp"    // IWYU pragma: export
#include "subbundles/serialize.hpp"     // IWYU pragma: export
#include "subbundles/verify.hpp"        // IWYU pragma: export
