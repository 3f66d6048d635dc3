#include "doctest.h"

#include "lefschetz/parser.hpp"
#include "lefschetz/projgeom.hpp"
#include "lefschetz/sampling.hpp"

#include "oracles.hpp"

using namespace lefschetz;

namespace {
const FieldConfig kQ = FieldConfig::rationals();

std::vector<Poly<Rational>> dual_forms(const std::vector<std::string>& exprs) {
    std::vector<Poly<Rational>> out;
    for (const auto& e : exprs)
        out.push_back(parse_poly<Rational>(e, {"u", "v", "w"}, kQ, VarSpace::Dual));
    return out;
}
}  // namespace

TEST_CASE("artinian decision at degree n(e-1)+1") {
    const auto squares = dual_forms({"u^2", "v^2", "w^2"});
    const auto cert = is_artinian_system(squares);
    CHECK(cert.artinian);
    CHECK(cert.decision_degree == 4);
    CHECK(cert.quotient_dim == 0);

    // (vw, uw, uv): the pure powers u^4, v^4, w^4 survive in degree 4.
    const auto offdiag = dual_forms({"v*w", "u*w", "u*v"});
    const auto cert2 = is_artinian_system(offdiag);
    CHECK_FALSE(cert2.artinian);
    CHECK(cert2.decision_degree == 4);
    CHECK(cert2.quotient_dim == 3);

    // Partials of u^3+v^3+w^3+3uvw: the mu = -1 Hesse cubic is smooth.
    const auto f = parse_poly<Rational>("u^3+v^3+w^3+3*u*v*w", {"u", "v", "w"}, kQ, VarSpace::Dual);
    CHECK(is_artinian_system(all_partials(f)).artinian);

    CHECK_THROWS_AS(is_artinian_system(dual_forms({"u^2", "v^2", "w"})), DegreeError);
}

TEST_CASE("condition (1): smoothness of the associated hypersurface") {
    // A proportional to uvw is singular at the three coordinate points.
    const GradedQuotient<Rational> q(oracle::monomial_squares());
    const auto a = associated_form(q);
    const auto cert = condition_smooth_assocform(a);
    CHECK_FALSE(cert.artinian);
    CHECK(cert.decision_degree == 4);

    // Hesse lambda=2: smooth.
    const GradedQuotient<Rational> hq(oracle::hesse_gradients(-1));
    CHECK(condition_smooth_assocform(associated_form(hq)).artinian);

    // Hesse lambda=-2: A proportional to u^3+v^3+w^3-3uvw, singular at (1:1:1);
    // check the singular point directly on the partials.
    const GradedQuotient<Rational> mq(oracle::hesse_gradients(+1));
    const auto ma = associated_form(mq);
    CHECK_FALSE(condition_smooth_assocform(ma).artinian);
    const std::vector<Rational> ones{Rational(1), Rational(1), Rational(1)};
    for (const auto& p : all_partials(ma.form))
        CHECK(evaluate(p, std::span<const Rational>(ones)).is_zero());
}

TEST_CASE("veronese coordinate forms") {
    const GradedQuotient<Rational> q(oracle::monomial_squares());
    const auto h = veronese_coordinate_forms(q);
    REQUIRE(h.size() == 3);
    // Standard basis of M_2 is (xy, xz, yz): h = (2 a1 a2, 2 a1 a3, 2 a2 a3).
    const std::vector<std::string> avars{"a1", "a2", "a3"};
    CHECK(h[0] == parse_poly<Rational>("2*a1*a2", avars, kQ, VarSpace::Coeff));
    CHECK(h[1] == parse_poly<Rational>("2*a1*a3", avars, kQ, VarSpace::Coeff));
    CHECK(h[2] == parse_poly<Rational>("2*a2*a3", avars, kQ, VarSpace::Coeff));
    for (const auto& hi : h) CHECK(hi.degree() == q.socle_degree() - 1);

    // h(1, 0, 0) = 0 reflects x^2 in J_2.
    const std::vector<Rational> e1{Rational(1), Rational(), Rational()};
    for (const auto& hi : h) CHECK(evaluate(hi, std::span<const Rational>(e1)).is_zero());
}

TEST_CASE("condition (2): emptiness of the Veronese intersection") {
    // Monomial fixture: false, with the coordinate witness x (x^2 in J_2).
    const GradedQuotient<Rational> q(oracle::monomial_squares());
    const auto cert = condition_veronese_empty(q);
    CHECK_FALSE(cert.empty_intersection);
    REQUIRE(cert.witness.has_value());
    CHECK(*cert.witness ==
          Poly<Rational>::term(VarSpace::Primal, Monomial{1, 0, 0}, Rational(1)));
    CHECK(q.normal_form(veronese_power(*cert.witness, q.socle_degree() - 1)).is_zero());

    // Hesse lambda=2: true, and it must agree with condition (1).
    const GradedQuotient<Rational> hq(oracle::hesse_gradients(-1));
    CHECK(condition_veronese_empty(hq).empty_intersection);

    // Fermat gradients share the monomial ideal: false with witness x.
    const auto fermat = milnor_system(
        parse_poly<Rational>("x^3+y^3+z^3", oracle::xyz(), kQ), kQ);
    const GradedQuotient<Rational> fq(fermat);
    const auto fc = condition_veronese_empty(fq);
    CHECK_FALSE(fc.empty_intersection);
    REQUIRE(fc.witness.has_value());
    CHECK(*fc.witness == Poly<Rational>::term(VarSpace::Primal, Monomial{1, 0, 0}, Rational(1)));
}

TEST_CASE("the two conditions agree on all reference fixtures") {
    for (const auto& sys : {oracle::monomial_squares(), oracle::hesse_gradients(-1),
                            oracle::hesse_gradients(+1),
                            oracle::make_system({"x^2", "y^2", "z^3"}, oracle::xyz())}) {
        const GradedQuotient<Rational> q(sys);
        CHECK(conditions_agree(q, associated_form(q)));
    }
}

TEST_CASE("soundness: regular sequences vs planted common zeros") {
    Rng rng(23);
    int tested = 0;
    while (tested < 8) {
        std::vector<Poly<Rational>> forms;
        for (int j = 0; j < 3; ++j) forms.push_back(random_form<Rational>(rng, kQ, 3, 2, 9));
        SystemInput<Rational> sys(forms, kQ);
        if (!certify_complete_intersection(sys).is_ci) continue;
        ++tested;
        CHECK(is_artinian_system(std::span<const Poly<Rational>>(forms)).artinian);
    }
    // Forms forced to vanish at p = (1, 1, 1): quotient stays nonzero.
    for (int rep = 0; rep < 8; ++rep) {
        const std::vector<Rational> p{Rational(1), Rational(1), Rational(1)};
        std::vector<Poly<Rational>> forms;
        for (int j = 0; j < 3; ++j) {
            auto g = random_form<Rational>(rng, kQ, 3, 2, 9);
            const Rational val = evaluate(g, std::span<const Rational>(p));
            g -= Poly<Rational>::term(VarSpace::Primal, Monomial{2, 0, 0}, val);
            if (g.is_zero()) g = parse_poly<Rational>("x^2 - y*z", oracle::xyz(), kQ);
            forms.push_back(std::move(g));
        }
        const auto cert = is_artinian_system(std::span<const Poly<Rational>>(forms));
        CHECK_FALSE(cert.artinian);
        CHECK(cert.quotient_dim >= 1);
    }
}

TEST_CASE("rank-screened quotient dimensions equal the echelon route") {
    // The rational decision route screens mod p and falls back to exact
    // elimination; both must agree with the full echelon construction.
    Rng rng(53);
    for (int it = 0; it < 10; ++it) {
        std::vector<Poly<Rational>> forms;
        for (int j = 0; j < 3; ++j) forms.push_back(random_form<Rational>(rng, kQ, 3, 2, 8));
        for (int d = 2; d <= 5; ++d) {
            const auto span = std::span<const Poly<Rational>>(forms);
            CHECK(ideal_piece_quotient_dim(span, 3, d) ==
                  static_cast<long>(ideal_degree_piece(span, 3, d).quotient_dim()));
        }
    }
    // Exact-fallback side: a non-Artinian system of cubes at its decision degree.
    std::vector<Poly<Rational>> cubes;
    for (std::size_t i = 0; i < 3; ++i)
        cubes.push_back(Poly<Rational>::term(
            VarSpace::Primal, Monomial::variable(3, i, 2) * Monomial::variable(3, (i + 1) % 3),
            Rational(1)));  // x^2 y, y^2 z, z^2 x: common zeros on the coordinate triangle
    const auto span = std::span<const Poly<Rational>>(cubes);
    const int decision = 3 * 2 + 1;
    CHECK(ideal_piece_quotient_dim(span, 3, decision) ==
          static_cast<long>(ideal_degree_piece(span, 3, decision).quotient_dim()));
    CHECK(ideal_piece_quotient_dim(span, 3, decision) > 0);
}

TEST_CASE("prime-field screening is one-sided") {
    // On every fixture: Artinian mod p implies Artinian over Q for the same
    // integer forms (rank mod p <= rank over Q).
    const FieldConfig fp = FieldConfig::prime(65537);
    const std::vector<std::vector<std::string>> fixture_exprs{
        {"x^2", "y^2", "z^2"},
        {"3*x^2 - 6*y*z", "3*y^2 - 6*x*z", "3*z^2 - 6*x*y"},
        {"x^2 - 2*y*z", "y^2 - 2*x*z", "z^2 - 2*x*y"},
        {"x^2 - y*z", "y^2 - x*z", "z^2 - x*y"},
    };
    for (const auto& exprs : fixture_exprs) {
        std::vector<Poly<Rational>> fq;
        std::vector<Poly<Fp>> fpforms;
        for (const auto& e : exprs) {
            fq.push_back(parse_poly<Rational>(e, oracle::xyz(), kQ));
            fpforms.push_back(parse_poly<Fp>(e, oracle::xyz(), fp));
        }
        const bool art_p = is_artinian_system(std::span<const Poly<Fp>>(fpforms)).artinian;
        const bool art_q = is_artinian_system(std::span<const Poly<Rational>>(fq)).artinian;
        if (art_p) CHECK(art_q);
        CHECK(art_p == art_q);  // no degeneration at this modulus on these fixtures
    }
}
