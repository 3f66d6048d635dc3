#include "doctest.h"

#include "lefschetz/parser.hpp"
#include "lefschetz/slp.hpp"

#include "oracles.hpp"

using namespace lefschetz;

namespace {
const FieldConfig kQ = FieldConfig::rationals();

Poly<Rational> parse(const std::string& s) {
    return parse_poly<Rational>(s, oracle::xyz(), kQ);
}
}  // namespace

TEST_CASE("slp_at_degree on the monomial fixture") {
    const GradedQuotient<Rational> q(oracle::monomial_squares());
    CHECK(slp_at_degree(q, 1, parse("x + y + z")));
    CHECK_FALSE(slp_at_degree(q, 1, parse("x")));  // x * x = 0 kills a direction

    // k = 0: holds whenever NF(ell^T) != 0; omega((x+y+z)^3) = 6/8.
    CHECK(slp_at_degree(q, 0, parse("x + y + z")));
    const auto s = socle_functional(q);
    CHECK(omega(q, s, veronese_power(parse("x + y + z"), 3)) ==
          Rational(mpz_class(6), mpz_class(8)));

    CHECK_THROWS_AS(slp_at_degree(q, 2, parse("x + y + z")), DegreeError);  // k >= T/2
    CHECK_THROWS_AS(slp_at_degree(q, -1, parse("x")), DegreeError);
    CHECK_THROWS_AS(slp_at_degree(q, 1, Poly<Rational>(VarSpace::Primal, 3, 1)), Error);
}

TEST_CASE("slp1 kernel diagnostics and rank-nullity") {
    const GradedQuotient<Rational> q(oracle::monomial_squares());

    const auto diag = slp1_kernel(q, parse("x"));
    REQUIRE(diag.kernel.size() == 1);
    CHECK(diag.kernel[0] == parse("x"));
    // The kernel element satisfies ell^(T-2) * ell_1 in J_(T-1).
    CHECK(q.normal_form(veronese_power(parse("x"), 1) * diag.kernel[0]).is_zero());

    CHECK(slp1_kernel(q, parse("x + y + z")).kernel.empty());

    // kernel dimension + rank of the k=1 matrix = n, on several lines.
    for (const char* expr : {"x", "x + y", "x + y + z", "x - z", "y + z"}) {
        const auto ell = parse(expr);
        const auto m = multiplication_matrix(q, veronese_power(ell, 1), 1);
        CHECK(slp1_kernel(q, ell).kernel.size() + rank(m) == 3);
        const bool holds = slp_at_degree(q, 1, ell);
        CHECK(holds == slp1_kernel(q, ell).kernel.empty());
    }
}

TEST_CASE("duality: full rank, injectivity and surjectivity coincide") {
    const GradedQuotient<Rational> hq(oracle::hesse_gradients(-1));
    const auto ell = parse("x + 2*y - z");
    const auto m = multiplication_matrix(hq, veronese_power(ell, 1), 1);
    REQUIRE(m.rows() == m.cols());  // hf(1) == hf(T-1)
    const std::size_t r = rank(m);
    const bool injective = r == m.rows();
    const bool surjective = r == m.cols();
    CHECK(injective == surjective);
    CHECK(slp_at_degree(hq, 1, ell) == injective);
}

TEST_CASE("witness search is deterministic per seed and finds witnesses") {
    const GradedQuotient<Rational> q(oracle::monomial_squares());
    const auto v1 = slp_witness_search(q, 1, 20, 1, 50);
    const auto v2 = slp_witness_search(q, 1, 20, 1, 50);
    CHECK(v1.status == SlpStatus::HoldsWithWitness);
    CHECK(v1.trials_used <= 3);  // failure locus is a hypersurface
    REQUIRE(v1.witness.has_value());
    REQUIRE(v2.witness.has_value());
    CHECK(*v1.witness == *v2.witness);
    CHECK(v1.trials_used == v2.trials_used);
    CHECK(slp_at_degree(q, 1, *v1.witness));  // re-checkable

    const GradedQuotient<Rational> hq(oracle::hesse_gradients(-1));
    CHECK(slp_witness_search(hq, 1, 20, 7, 50).status == SlpStatus::HoldsWithWitness);

    const auto bad = oracle::make_system({"x^2 - y*z", "y^2 - x*z", "z^2 - x*y"}, oracle::xyz());
    const GradedQuotient<Rational> bq(bad);
    CHECK_THROWS_AS(slp_witness_search(bq, 1, 5, 1, 10), NotCompleteIntersectionError);
}

TEST_CASE("monomial complete intersections hold at every k < T/2") {
    const std::vector<std::vector<int>> multidegrees{{2, 2, 2}, {2, 2, 3}, {2, 3, 3}, {3, 3, 3}};
    for (const auto& degs : multidegrees) {
        std::vector<Poly<Rational>> gens;
        for (std::size_t i = 0; i < 3; ++i)
            gens.push_back(Poly<Rational>::term(
                VarSpace::Primal, Monomial::variable(3, i, static_cast<std::uint32_t>(degs[i])),
                Rational(1)));
        const GradedQuotient<Rational> q(SystemInput<Rational>(std::move(gens), kQ));
        const int t = q.socle_degree();
        for (int k = 0; 2 * k < t; ++k) {
            const auto v = slp_witness_search(q, k, 20, 11, 50);
            CHECK(v.status == SlpStatus::HoldsWithWitness);
        }
    }
}

TEST_CASE("witness openness under small perturbations") {
    const GradedQuotient<Rational> q(oracle::monomial_squares());
    const auto v = slp_witness_search(q, 1, 20, 3, 50);
    REQUIRE(v.witness.has_value());
    Rng rng(17);
    bool some_perturbation_stays = false;
    for (int rep = 0; rep < 3; ++rep) {
        auto ell = *v.witness;
        const std::size_t i = rng.below(3);
        Poly<Rational> delta = Poly<Rational>::term(
            VarSpace::Primal, Monomial::variable(3, i),
            Rational(mpz_class(static_cast<long>(rng.int_in(1, 5))), mpz_class(100)));
        ell += delta;
        if (!ell.is_zero() && slp_at_degree(q, 1, ell)) some_perturbation_stays = true;
    }
    CHECK(some_perturbation_stays);
}

TEST_CASE("probabilistic and certified failure paths (Frobenius-degenerate screens)") {
    // Over F_5, ell^5 is a linear combination of x^5, y^5, z^5 for every ell,
    // so multiplication by ell^(T-2) = (ell^5)^2 on (x^5, y^5, z^5) is the
    // zero map M_1 -> M_11: n = 3 certifies the vanishing determinant.
    {
        const FieldConfig cfg = FieldConfig::prime(5);
        std::vector<Poly<Fp>> gens;
        for (std::size_t i = 0; i < 3; ++i)
            gens.push_back(Poly<Fp>::term(VarSpace::Primal, Monomial::variable(3, i, 5),
                                          Fp::from_int(cfg, 1)));
        const GradedQuotient<Fp> q(SystemInput<Fp>(std::move(gens), cfg));
        REQUIRE(q.certified_ci());
        REQUIRE(q.socle_degree() == 12);
        const auto v = slp_witness_search(q, 1, 4, 9, 50);
        CHECK(v.status == SlpStatus::FailsCertified);
        CHECK(v.det_degree_bound == 3 * 10);
        CHECK(v.sample_size == 5);
    }
    // n = 4 disables the symbolic expansion: the same phenomenon over F_3
    // with (x^3, y^3, z^3, w^3) reports PROBABLY_FAILS.
    {
        const FieldConfig cfg = FieldConfig::prime(3);
        std::vector<Poly<Fp>> gens;
        for (std::size_t i = 0; i < 4; ++i)
            gens.push_back(Poly<Fp>::term(VarSpace::Primal, Monomial::variable(4, i, 3),
                                          Fp::from_int(cfg, 1)));
        const GradedQuotient<Fp> q(SystemInput<Fp>(std::move(gens), cfg));
        REQUIRE(q.certified_ci());
        REQUIRE(q.socle_degree() == 8);
        const auto v = slp_witness_search(q, 1, 3, 9, 50);
        CHECK(v.status == SlpStatus::ProbablyFails);
        CHECK(v.trials_used == 3);
    }
    // The symbolic determinant machinery itself, on a fixture where it must
    // not vanish: (x^2, y^2, z^2) at k = 1.
    {
        const GradedQuotient<Rational> q(oracle::monomial_squares());
        CHECK_FALSE(lefschetz::detail::slp_determinant_identically_zero(q, 1));
    }
}
