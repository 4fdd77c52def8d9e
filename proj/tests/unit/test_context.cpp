#include <doctest.h>

#include <random>

#include "gccl/context.hpp"
#include "support/oracle.hpp"

using namespace gccl;
namespace gt = gccl::testing;

namespace {
const char* kK1File =
    "B\n"
    "3\n"
    "3\n"
    "g1\n"
    "g2\n"
    "g3\n"
    "a\n"
    "b\n"
    "c\n"
    "XX.\n"
    ".XX\n"
    "XXX\n";
}

TEST_CASE("object_intent reads rows") {
    const FormalContext ctx = gt::k1();
    CHECK(ctx.object_intent(0).bits() == Bitset::from_string("110"));
    CHECK(ctx.object_intent(1).bits() == Bitset::from_string("011"));
    CHECK_THROWS_AS((void)ctx.object_intent(3), std::out_of_range);

    const FormalContext none({"g1"}, {"a", "b"}, {Bitset(2)});
    CHECK(none.object_intent(0).none());
    const FormalContext full({"g1"}, {"a", "b"}, {Bitset(2, true)});
    CHECK(full.object_intent(0).count() == 2);
}

TEST_CASE("attribute_extent reads columns") {
    const FormalContext ctx = gt::k1();
    CHECK(ctx.attribute_extent(1).bits() == Bitset::from_string("111"));  // b
    CHECK(ctx.attribute_extent(0).bits() == Bitset::from_string("101"));  // a
    CHECK_THROWS_AS((void)ctx.attribute_extent(9), std::out_of_range);
}

TEST_CASE("row/column mutual consistency on random contexts") {
    std::mt19937 rng(11);
    for (int it = 0; it < 50; ++it) {
        const FormalContext ctx = gt::random_context(rng, 8, 8);
        for (std::size_t g = 0; g < ctx.object_count(); ++g)
            for (std::size_t m = 0; m < ctx.attribute_count(); ++m)
                CHECK(ctx.object_intent(g).test(m) == ctx.attribute_extent(m).test(g));
    }
}

TEST_CASE("parse/serialize round trip") {
    const FormalContext ctx = parse_context(kK1File);
    CHECK(ctx.object_count() == 3);
    CHECK(ctx.attribute_count() == 3);
    CHECK(ctx.object_name(2) == "g3");
    CHECK(ctx.attribute_name(0) == "a");
    CHECK(ctx.incidence(0, 0));
    CHECK_FALSE(ctx.incidence(1, 0));
    CHECK(serialize_context(ctx) == kK1File);

    // serialize then parse is the identity
    const FormalContext again = parse_context(serialize_context(ctx));
    CHECK(again.object_names() == ctx.object_names());
    CHECK(again.attribute_names() == ctx.attribute_names());
    for (std::size_t g = 0; g < 3; ++g) CHECK(again.row(g) == ctx.row(g));
}

TEST_CASE("parse tolerates trailing whitespace") {
    std::string text = kK1File;
    text.insert(text.find("XX.\n") + 3, "  ");
    const FormalContext ctx = parse_context(text + "\n  \n");
    CHECK(serialize_context(ctx) == kK1File);
}

TEST_CASE("parse errors carry line numbers") {
    CHECK_THROWS_WITH_AS((void)parse_context(""), "line 1: empty context file", ParseError);

    try {
        (void)parse_context("B\n2\n2\ng1\ng2\na\nb\nXX\nX\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 9);  // the short row
    }

    try {
        (void)parse_context("B\n1\n2\ng1\na\nb\nX?\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 7);
    }

    CHECK_THROWS_AS((void)parse_context("B\n2\n1\ng1\ng1\na\nX\nX\n"), ParseError);  // dup object
    CHECK_THROWS_AS((void)parse_context("B\n1\n1\ng1\na\n"), ParseError);            // truncated
    CHECK_THROWS_AS((void)parse_context("X\n1\n1\ng1\na\nX\n"), ParseError);         // bad magic
}

TEST_CASE("degenerate serializations") {
    const FormalContext empty({}, {"a", "b"}, {});
    CHECK(serialize_context(empty) == "B\n0\n2\na\nb\n");
    const FormalContext one({"g"}, {"a"}, {Bitset::from_string("1")});
    CHECK(serialize_context(one) == "B\n1\n1\ng\na\nX\n");
    const FormalContext round = parse_context(serialize_context(empty));
    CHECK(round.object_count() == 0);
    CHECK(round.attribute_count() == 2);
}

TEST_CASE("appends keep ordering stable and bump the generation") {
    FormalContext ctx = gt::k1();
    const auto gen0 = ctx.generation();
    ctx.append_object("g4", Bitset::from_string("100"));
    CHECK(ctx.generation() == gen0 + 1);
    CHECK(ctx.object_count() == 4);
    CHECK(ctx.object_name(0) == "g1");
    CHECK(ctx.object_name(3) == "g4");
    CHECK(ctx.attribute_extent(0).bits() == Bitset::from_string("1011"));

    ctx.append_attribute("d", Bitset::from_string("0101"));
    CHECK(ctx.generation() == gen0 + 2);
    CHECK(ctx.attribute_count() == 4);
    CHECK(ctx.row(1) == Bitset::from_string("0111"));
    CHECK(ctx.row(3) == Bitset::from_string("1001"));
    CHECK(ctx.column(3) == Bitset::from_string("0101"));

    CHECK_THROWS_AS(ctx.append_object("g1", Bitset(4)), Error);
    CHECK_THROWS_AS(ctx.append_object("g5", Bitset(3)), Error);  // width mismatch
    CHECK_THROWS_AS(ctx.append_attribute("a", Bitset(4)), Error);
}

TEST_CASE("cross-generation set algebra is rejected") {
    FormalContext ctx = gt::k1();
    const ObjectSet before = ctx.full_object_set();
    ctx.append_object("g4", Bitset(3));
    const ObjectSet after = ctx.full_object_set();
    CHECK_THROWS_AS((void)(before & after), GenerationError);
    CHECK_THROWS_AS((void)(before == after), GenerationError);
}

TEST_CASE("named set construction") {
    const FormalContext ctx = gt::k1();
    CHECK(ctx.object_set({"g1", "g3"}).bits() == Bitset::from_string("101"));
    CHECK(ctx.attribute_set({"b"}).bits() == Bitset::from_string("010"));
    CHECK_THROWS_AS((void)ctx.object_set({"nope"}), Error);
}

TEST_CASE("many-valued context validates cells") {
    ManyValuedContext mvc({{"color", {"red", "blue"}, "?"}, {"size", {"s", "l"}, "?"}});
    mvc.append_row("r0", {"red", "l"});
    mvc.append_row("r1", {"?", "s"});
    CHECK(mvc.row_count() == 2);
    CHECK(mvc.is_missing(1, 0));
    CHECK(mvc.cell(0, 1) == "l");
    CHECK_THROWS_AS(mvc.append_row("r2", {"green", "s"}), DataError);
    CHECK_THROWS_AS(mvc.append_row("r3", {"red"}), DataError);
    CHECK_THROWS_AS(ManyValuedContext({{"x", {}, "?"}}), SchemaError);
}
