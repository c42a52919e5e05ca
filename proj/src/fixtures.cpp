#include "skat/fixtures.hpp"

#include <map>

namespace skat::fixtures {

namespace {

struct Row {
    Symbol a, b, c, e;
    Rational p;
};

JointDistribution from_rows(std::int64_t eve_alphabet, std::span<const Row> rows) {
    std::vector<VariableSpec> vars{
        {"A", 2, Role::honest},
        {"B", 2, Role::honest},
        {"C", 2, Role::honest},
        {"E", eve_alphabet, Role::eavesdropper},
    };
    DistributionBuilder builder(std::move(vars));
    for (const auto& r : rows)
        builder.add({r.a, r.b, r.c, r.e}, r.p.to_double(), r.p);
    return std::move(builder).build();
}

JointDistribution build_p1() {
    const Rational sixth{1, 6};
    const Row rows[] = {
        {0, 0, 0, 0, sixth}, {0, 0, 1, 1, sixth}, {0, 1, 0, 2, sixth},
        {1, 0, 1, 3, sixth}, {1, 1, 0, 4, sixth}, {1, 1, 1, 0, sixth},
    };
    return from_rows(5, rows);
}

JointDistribution build_pmix() {
    const Rational sixth{1, 6};
    const Rational ninth{1, 9};
    const Row rows[] = {
        {0, 0, 0, 0, sixth}, {0, 0, 1, 1, ninth}, {0, 1, 0, 2, ninth},
        {0, 1, 1, 3, ninth}, {1, 0, 0, 4, ninth}, {1, 0, 1, 5, ninth},
        {1, 1, 0, 6, ninth}, {1, 1, 1, 0, sixth},
    };
    return from_rows(7, rows);
}

}  // namespace

std::optional<FixtureId> parse_fixture_id(std::string_view text) {
    if (text == "p1") return FixtureId::p1;
    if (text == "p2") return FixtureId::p2;
    if (text == "p3") return FixtureId::p3;
    if (text == "pmix") return FixtureId::pmix;
    return std::nullopt;
}

std::string to_string(FixtureId id) {
    switch (id) {
        case FixtureId::p1: return "p1";
        case FixtureId::p2: return "p2";
        case FixtureId::p3: return "p3";
        case FixtureId::pmix: return "pmix";
    }
    return "";
}

std::vector<std::string> fixture_names() { return {"p1", "p2", "p3", "pmix"}; }

JointDistribution build(FixtureId id) {
    switch (id) {
        case FixtureId::p1:
            return build_p1();
        case FixtureId::p2:
            // P2(A,B,C,E) = P1(B,C,A,E): every value moves one party forward.
            return permute(build_p1(), {{"A", "B"}, {"B", "C"}, {"C", "A"}});
        case FixtureId::p3:
            // P3(A,B,C,E) = P1(C,A,B,E): the inverse cycle.
            return permute(build_p1(), {{"A", "C"}, {"C", "B"}, {"B", "A"}});
        case FixtureId::pmix:
            return build_pmix();
    }
    throw validation_error("unknown fixture id");
}

}  // namespace skat::fixtures
