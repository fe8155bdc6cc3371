#include <string>

#include <gtest/gtest.h>

#include "landau_paraxial/fixtures.hpp"
#include "landau_paraxial/io_format.hpp"
#include "test_support.hpp"

namespace lp = landau_paraxial;

TEST(FixtureTable, Lookup)
{
    const auto& t = lp_test::fixtures();
    const auto c00 = lp::load_fixture(t, "C_00");
    EXPECT_NEAR(c00.as_double(), 0.7978845608028654, 1e-15);
    EXPECT_EQ(c00.kind(), "derived");
    EXPECT_EQ(lp::load_fixture(t, "q_electron_0_1_minus").as_long(), 2);
    EXPECT_THROW(lp::load_fixture(t, "missing"), lp::LookupError);
    EXPECT_FALSE(t.contains("missing"));
    EXPECT_GE(t.size(), 25u);
}

TEST(FixtureTable, EveryEntryHasKnownProvenance)
{
    const auto doc = lp::KeyValueDocument::parse(lp::read_text_file(LP_FIXTURES_PATH));
    for (const auto& l : doc.lines()) {
        if (l.kind == lp::KeyValueLine::Kind::entry && l.key.rfind("provenance.", 0) != 0) {
            const auto kind = lp_test::fixtures().get(l.key).kind();
            EXPECT_TRUE(kind == "derived" || kind == "trivial" || kind == "published") << l.key;
        }
    }
}

TEST(FixtureTable, ByteIdenticalRoundTrip)
{
    const std::string text = lp::read_text_file(LP_FIXTURES_PATH);
    EXPECT_EQ(lp::FixtureTable::parse(text).emit(), text);
}

TEST(FixtureTable, MissingOrBadProvenance)
{
    EXPECT_THROW(lp::FixtureTable::parse("a = 1\n"), lp::ConfigError);
    EXPECT_THROW(lp::FixtureTable::parse("a = 1\nprovenance.a = guessed: from memory\n"), lp::ConfigError);
    EXPECT_THROW(lp::FixtureTable::parse("provenance.a = derived: orphan\n"), lp::ConfigError);
    const auto t = lp::FixtureTable::parse("a = 1,2.5,-3\nprovenance.a = trivial: list\n");
    EXPECT_EQ(t.get("a").as_vector(), (std::vector<double>{1.0, 2.5, -3.0}));
    EXPECT_THROW(t.get("a").as_double(), lp::UsageError);
}
