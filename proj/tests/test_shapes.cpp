#include <catch2/catch_amalgamated.hpp>

#include <schubertk/shapes.hpp>

using namespace schubertk;

TEST_CASE("partition basics", "[shapes]") {
    Partition p({3, 1, 0, 0});
    REQUIRE(p.length() == 2);
    REQUIRE(p.first() == 3);
    REQUIRE(p.weight() == 4);
    REQUIRE(p.padded(3) == std::vector<int>({3, 1, 0}));
    REQUIRE(p.to_string(3) == "[3,1,0]");
    REQUIRE_THROWS_AS(Partition({1, 2}), bad_input_error);
    REQUIRE_THROWS_AS(Partition({-1}), bad_input_error);
}

TEST_CASE("symbols are jump positions", "[shapes]") {
    REQUIRE(to_symbol(Partition({}), 2) == SchubertSymbol({1, 2}));
    REQUIRE(to_symbol(Partition({2, 1}), 2) == SchubertSymbol({2, 4}));
    REQUIRE(to_symbol(Partition({2, 2}), 2) == SchubertSymbol({3, 4}));
    REQUIRE(to_partition(SchubertSymbol({2, 4})) == Partition({2, 1}));
    for (const Partition& p : enumerate_box(2, 5))
        REQUIRE(to_partition(to_symbol(p, 2)) == p);
    REQUIRE(valid_symbol(SchubertSymbol({1, 3}), 4));
    REQUIRE_FALSE(valid_symbol(SchubertSymbol({3, 3}), 4));
}

TEST_CASE("box enumeration in dictionary order", "[shapes]") {
    std::vector<Partition> box = enumerate_box(2, 4);
    REQUIRE(box.size() == 6);
    REQUIRE(box.front() == Partition({}));
    REQUIRE(box.back() == Partition({2, 2}));
    for (std::size_t i = 0; i + 1 < box.size(); ++i)
        REQUIRE(dict_less(box[i], box[i + 1], 2));
    REQUIRE(enumerate_box(1, 5).size() == 5);
    REQUIRE(enumerate_box(3, 6).size() == 20);
}

TEST_CASE("containment order on symbols", "[shapes]") {
    REQUIRE(bruhat_leq(Partition({}), Partition({2, 2})));
    REQUIRE(bruhat_leq(Partition({1}), Partition({2, 1})));
    REQUIRE_FALSE(bruhat_leq(Partition({2}), Partition({1, 1})));
    REQUIRE_FALSE(bruhat_leq(Partition({1, 1}), Partition({2})));
    // containment refines dictionary order
    for (const Partition& a : enumerate_box(2, 5))
        for (const Partition& b : enumerate_box(2, 5))
            if (bruhat_leq(a, b) && !(a == b)) REQUIRE(dict_less(a, b, 2));
}

TEST_CASE("colength counts missing boxes", "[shapes]") {
    REQUIRE(colength(Partition({}), 2, 4) == 4);
    REQUIRE(colength(Partition({2, 2}), 2, 4) == 0);
    REQUIRE(colength(Partition({1}), 2, 4) == 3);
}

TEST_CASE("reversals and inversions", "[shapes]") {
    // one symbol entry moved down / up by any amount, dictionary order
    auto rev = reversals(Partition({2, 1}), 2, 4);
    REQUIRE(rev == std::vector<Partition>({Partition({}), Partition({2}), Partition({1, 1})}));
    auto inv = inversions(Partition({1}), 2, 4);
    REQUIRE(inv ==
            std::vector<Partition>({Partition({2}), Partition({1, 1}), Partition({2, 2})}));
    REQUIRE(reversals(Partition({}), 2, 4).empty());
    REQUIRE(inversions(Partition({2, 2}), 2, 4).empty());
    for (const Partition& lam : enumerate_box(2, 4))
        REQUIRE(static_cast<long long>(inversions(lam, 2, 4).size()) == colength(lam, 2, 4));
}

TEST_CASE("simple reflections move one symbol entry", "[shapes]") {
    // i+1 present, i absent: the shape shrinks
    reflection_result r = simple_reflection(2, Partition({1}), 2);
    REQUIRE(r.cmp == -1);
    REQUIRE(r.value == Partition({}));
    // i present, i+1 absent: the shape grows
    r = simple_reflection(1, Partition({1}), 2);
    REQUIRE(r.cmp == 1);
    REQUIRE(r.value == Partition({1, 1}));
    // both or neither: fixed
    REQUIRE(simple_reflection(2, Partition({1, 1}), 2).cmp == 0);
    REQUIRE(simple_reflection(5, Partition({1}), 2).cmp == 0);
}

TEST_CASE("single steps add at most one box per row and column", "[shapes]") {
    REQUIRE(single_step(Partition({1}), Partition({1})));
    REQUIRE(single_step(Partition({1}), Partition({2, 1})));
    REQUIRE(single_step(Partition({1, 0}), Partition({2, 1})));
    REQUIRE_FALSE(single_step(Partition({}), Partition({2})));
    REQUIRE_FALSE(single_step(Partition({}), Partition({1, 1})));
    REQUIRE_FALSE(single_step(Partition({2, 1}), Partition({1})));
    auto t = step_targets(Partition({1}), 2, 2);
    REQUIRE(t == std::vector<Partition>({Partition({1}), Partition({2}), Partition({1, 1}),
                                         Partition({2, 1})}));
}

TEST_CASE("chain contexts count unit chains", "[shapes]") {
    ChainContext ctx(2, 4, [](const Partition&) { return Int(1); });
    REQUIRE(unit_chain_count(ctx, {Partition({}), 0, Partition({})}) == 1);
    REQUIRE(unit_chain_count(ctx, {Partition({1}), 3, Partition({1})}) == 1);
    for (long long k = 1; k <= 5; ++k)
        REQUIRE(unit_chain_count(ctx, {Partition({1}), k, Partition({2})}) == k);
    // no chain can reach below or sideways
    REQUIRE(unit_chain_count(ctx, {Partition({2}), 2, Partition({1, 1})}) == 0);
    REQUIRE(unit_chain_count(ctx, {Partition({2}), 0, Partition({2, 1})}) == 0);
}

TEST_CASE("weighted chain scaffolding", "[shapes]") {
    // weights on one row of length <= 3: c(0)=4, c(1)=2, c(2)=1, c(3)=1
    auto c = [](const Partition& p) {
        static const Int table[] = {4, 2, 1, 1};
        return table[p.first()];
    };
    ChainContext ctx(1, 3, c);
    REQUIRE(ctx.c_of(Partition({2})) == 1);
    REQUIRE(ctx.ratio(Partition({}), Partition({1})) == 2);
    REQUIRE_THROWS_AS(ctx.ratio(Partition({1}), Partition({})), undefined_ratio_error);
    REQUIRE(ctx.reachable({Partition({}), 1, Partition({1})}));
    REQUIRE_FALSE(ctx.reachable({Partition({}), 1, Partition({2})}));
    REQUIRE(ctx.reachable({Partition({}), 2, Partition({2})}));
    const auto& chs = ctx.chains({Partition({}), 2, Partition({2})});
    REQUIRE(chs.size() == 1);
    for (const Chain& ch : chs) REQUIRE(ch.size() == 3);
}
