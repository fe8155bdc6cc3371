#pragma once

#include <cmath>
#include <string>

#include "landau_paraxial/fixtures.hpp"

namespace lp_test {

inline const landau_paraxial::FixtureTable& fixtures()
{
    static const landau_paraxial::FixtureTable table = landau_paraxial::FixtureTable::load(LP_FIXTURES_PATH);
    return table;
}

inline double fixture(const std::string& name) { return fixtures().get(name).as_double(); }

inline double rel_diff(double a, double b) { return std::abs(a - b) / std::abs(b); }

} // namespace lp_test
