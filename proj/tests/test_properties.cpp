#include <doctest.h>

#include "apery/properties.hpp"

using namespace apery;

namespace {

constexpr std::uint64_t kSeed = 20240607;

void expect(const PropertyResult& r) {
    CAPTURE(r.name);
    CAPTURE(r.detail);
    CHECK(r.cases > 0);
    CHECK(r.pass);
}

}  // namespace

TEST_CASE("shuffle algebra") {
    expect(check_shuffle_algebra(kSeed));
    expect(check_shuffle_homomorphism(kSeed));
}

TEST_CASE("regularization and reversal") {
    expect(check_reg_roundtrip(kSeed));
    expect(check_reversal(kSeed));
}

TEST_CASE("change of variables") {
    expect(check_letter_pullbacks());
    expect(check_prefactor_identity());
    expect(check_cov_numeric(kSeed));
}

TEST_CASE("compiled word bookkeeping") { expect(check_compile_bookkeeping(kSeed)); }

TEST_CASE("canonical monomials") { expect(check_corpus_admissible()); }

TEST_CASE("random specs are valid and bounded") {
    std::mt19937_64 rng(kSeed);
    for (int k = 0; k < 100; ++k) {
        SeriesSpec s = random_spec(rng, mpq_class(1, 4), 3, 5);
        CHECK(validate(s).empty());
        CHECK(s.depth() <= 3);
        CHECK(s.weight() <= 5);
    }
}
