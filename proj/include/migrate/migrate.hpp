#ifndef MIGRATE_MIGRATE_HPP
#define MIGRATE_MIGRATE_HPP

#include "migrate/error.hpp"
#include "migrate/rational.hpp"
#include "migrate/model.hpp"
#include "migrate/problems.hpp"
#include "migrate/framework.hpp"
#include "migrate/variants.hpp"
#include "migrate/stream.hpp"
#include "migrate/claims.hpp"
#include "migrate/adversary.hpp"
#include "migrate/random_streams.hpp"
#include "migrate/harness.hpp"
#include "migrate/config.hpp"
#include "migrate/acceptance.hpp"

#endif  // MIGRATE_MIGRATE_HPP
