#include <doctest.h>

#include "arcinv/error.hpp"
#include "arcinv/hickel.hpp"
#include "support.hpp"

using namespace testing;

namespace {

ReesAlgebra saturated(const RingPtr& r, const std::string& f, std::uint32_t w) {
    return diff_saturate(ReesAlgebra(r, {gen(r, f, w)}));
}

}  // namespace

TEST_CASE("init_state") {
    auto r = ring(Q(), {"x", "y"});
    ReesAlgebra g = saturated(r, "x^2 - y^3", 2);
    DirectedBlowupState s = init_state(arc(r, {"t^3", "t^2"}, 12), g, pt(Q(), {0, 0}));
    CHECK(s.step == 0);
    CHECK(s.algebra.ring().variables() == std::vector<std::string>{"x", "y", "s"});
    CHECK(s.center == pt(Q(), {0, 0, 0}));
    CHECK(s.arc == arc(s.algebra.ring_ptr(), {"t^3", "t^2", "t"}, 12));
    CHECK(nu_t(s.arc, s.center) == OrderValue::finite(1));
    CHECK(in_singular_locus(s.algebra, s.center));

    SUBCASE("fresh line name") {
        auto rs = ring(Q(), {"s", "x"});
        ReesAlgebra h(rs, {gen(rs, "x^2", 2)});
        DirectedBlowupState t = init_state(arc(rs, {"t", "t"}, 6), h, pt(Q(), {0, 0}));
        CHECK(t.algebra.ring().variables().back() == "s_");
    }
    SUBCASE("preconditions") {
        CHECK_THROWS_AS(init_state(arc(r, {"t^3", "t^2"}, 12), g, pt(Q(), {1, 1})), Error);
        CHECK_THROWS_AS(init_state(arc(r, {"1 + t", "1 + t"}, 12), g, pt(Q(), {1, 1})), Error);
    }
}

TEST_CASE("directed_step on the cusp") {
    auto r = ring(Q(), {"x", "y"});
    ReesAlgebra g = saturated(r, "x^2 - y^3", 2);
    DirectedBlowupState s0 = init_state(arc(r, {"t^3", "t^2"}, 12), g, pt(Q(), {0, 0}));
    CHECK(choose_chart(s0.arc) == 2u);
    DirectedBlowupState s1 = directed_step(s0);
    auto r3 = s1.algebra.ring_ptr();
    CHECK(s1.step == 1);
    CHECK(s1.charts == std::vector<std::size_t>{2});
    CHECK(s1.arc == arc(r3, {"t^2", "t", "t"}, 11));
    ReesAlgebra want(r3, {gen(r3, "x^2 - s*y^3", 2), gen(r3, "2*x", 1), gen(r3, "-3*s*y^2", 1)});
    CHECK(s1.algebra == want);
    CHECK(in_singular_locus(s1.algebra, s1.center));

    DirectedBlowupState s2 = directed_step(s1);
    CHECK(s2.charts.back() == 1u);  // y ties with s, lower index wins
    DirectedBlowupState s3 = directed_step(s2);
    CHECK_FALSE(in_singular_locus(s3.algebra, s3.center));
    CHECK_THROWS_AS(directed_step(s3), Error);
}

TEST_CASE("choose_chart skips units") {
    auto r = ring(Q(), {"x", "y"});
    CHECK(choose_chart(arc(r, {"1 + t", "t^2"}, 6)) == 0u);
    CHECK(choose_chart(arc(r, {"1 + t^3", "t^2"}, 6)) == 1u);
    CHECK(choose_chart(arc(r, {"1", "2"}, 6)) == std::nullopt);
}

TEST_CASE("persistence_oracle") {
    SUBCASE("cusp char 0") {
        auto r = ring(Q(), {"x", "y"});
        OracleResult o = persistence_oracle(arc(r, {"t^3", "t^2"}, 12), saturated(r, "x^2 - y^3", 2), pt(Q(), {0, 0}));
        CHECK(o.dropped());
        CHECK(o.steps == 3);
        CHECK(o.trace.size() == 4);
        CHECK(o.trace.front().in_sing);
        CHECK_FALSE(o.trace.back().in_sing);
    }
    SUBCASE("line") {
        auto r = ring(Q(), {"x"});
        ReesAlgebra g(r, {gen(r, "x", 1)});
        OracleResult o = persistence_oracle(arc(r, {"t"}, 6), g, pt(Q(), {0}));
        CHECK(o.dropped());
        CHECK(o.steps == 1);
    }
    SUBCASE("Whitney umbrella") {
        auto r = ring(Q(), {"x", "y", "z"});
        OracleResult o = persistence_oracle(arc(r, {"t^3", "t^2", "t^2"}, 16), saturated(r, "x^2 - z*y^2", 2),
                                            pt(Q(), {0, 0, 0}));
        CHECK(o.dropped());
        CHECK(o.steps == 3);
    }
    SUBCASE("fractional r drops at the floor") {
        auto r = ring(Q(), {"x", "y"});
        OracleResult o = persistence_oracle(arc(r, {"t", "t^5"}, 20), saturated(r, "x^3 - y^2", 2), pt(Q(), {0, 0}));
        CHECK(o.dropped());
        CHECK(o.steps == 1);
    }
    SUBCASE("arc in the top stratum") {
        auto r = ring(Q(), {"x", "y"});
        OracleResult o = persistence_oracle(arc(r, {"0", "t"}, 80), saturated(r, "x^2", 2), pt(Q(), {0, 0}), 10);
        CHECK(o.kind == OracleResult::Kind::DidNotDrop);
        CHECK(o.steps == 10);
    }
    SUBCASE("short precision exhausts") {
        auto r = ring(Q(), {"x", "y"});
        OracleResult o = persistence_oracle(arc(r, {"0", "t"}, 8), saturated(r, "x^2", 2), pt(Q(), {0, 0}), 64);
        CHECK(o.kind == OracleResult::Kind::PrecisionExhausted);
        CHECK(o.retry_precision > 8);
        CHECK_FALSE(o.message.empty());
    }
    SUBCASE("center off the origin") {
        auto r = ring(Q(), {"x", "y"});
        ReesAlgebra g = saturated(r, "(x-1)^2 - (y+2)^3", 2);
        OracleResult o = persistence_oracle(arc(r, {"1 + t^3", "-2 + t^2"}, 12), g, pt(Q(), {1, -2}));
        CHECK(o.dropped());
        CHECK(o.steps == 3);
    }
}

TEST_CASE("nash_sequence_hypersurface") {
    auto r = ring(Q(), {"x", "y"});
    SUBCASE("cusp") {
        NashSequence n = nash_sequence_hypersurface(arc(r, {"t^3", "t^2"}, 12), P(r, "x^2 - y^3"), pt(Q(), {0, 0}));
        CHECK(n.multiplicities == std::vector<std::uint64_t>{2, 2, 2, 1});
        CHECK(n.kind == OracleResult::Kind::Dropped);
        CHECK(n.first_drop() == 3u);
    }
    SUBCASE("x^2 along (0, t)") {
        NashSequence n = nash_sequence_hypersurface(arc(r, {"0", "t"}, 80), P(r, "x^2"), pt(Q(), {0, 0}), 12);
        CHECK(n.kind == OracleResult::Kind::DidNotDrop);
        CHECK(n.multiplicities.size() == 13);
        for (auto m : n.multiplicities) CHECK(m == 2);
        CHECK_FALSE(n.first_drop().has_value());
    }
    SUBCASE("smooth point is rejected") {
        CHECK_THROWS_AS(nash_sequence_hypersurface(arc(r, {"t", "0"}, 8), P(r, "x"), pt(Q(), {0, 0})), Error);
    }
    SUBCASE("arc off the hypersurface is rejected") {
        CHECK_THROWS_AS(nash_sequence_hypersurface(arc(r, {"t^3", "t^3"}, 12), P(r, "x^2 - y^3"), pt(Q(), {0, 0})),
                        Error);
    }
    SUBCASE("matches the algebra-level oracle") {
        auto r3 = ring(Q(), {"x", "y", "z"});
        Arc a = arc(r3, {"t^3", "t^2", "t^2"}, 16);
        NashSequence n = nash_sequence_hypersurface(a, P(r3, "x^2 - z*y^2"), pt(Q(), {0, 0, 0}));
        OracleResult o = persistence_oracle(a, saturated(r3, "x^2 - z*y^2", 2), pt(Q(), {0, 0, 0}));
        CHECK(n.first_drop() == o.steps);
    }
}
