#include <doctest.h>

#include <cstdint>
#include <random>

#include "helpers.hpp"
#include "valence/monoid.hpp"

using namespace valence;
using namespace valence::test;

namespace {

const Alphabet X1{{"x"}};
const Alphabet X2{{"x", "y"}};

SignedWord sw(const Alphabet& a, const std::string& tokens) {
    return SignedWord::parse(a, tokens);
}

}  // namespace

TEST_CASE("free reduction of the defining relations") {
    CHECK(free_reduce(sw(X1, "x x^-1")).is_identity());
    CHECK(free_reduce(sw(X2, "x^-1 x y")).word().tokens() == "y");
}

TEST_CASE("free reduction is confluent and matches exhaustive rewriting") {
    // x y y^-1 x^-1 x reduces to x whichever pair is deleted first.
    CHECK(free_reduce(sw(X2, "x y y^-1 x^-1 x")).word().tokens() == "x");
    for (const auto& w : all_signed_words(X2, 6)) {
        auto irreducible = rewrite_descendants(w);
        REQUIRE(irreducible.size() == 1);
        CHECK(*irreducible.begin() == free_reduce(w).word().letters());
    }
}

TEST_CASE("free reduction is idempotent") {
    for (const auto& w : all_signed_words(X2, 8))
        CHECK(free_reduce(free_reduce(w).word()) == free_reduce(w));
    // Sampled at rank 3 and length 10.
    Alphabet x3{{"x", "y", "z"}};
    auto letters = signed_letters(x3);
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 20000; ++trial) {
        std::vector<SignedLetter> ls;
        std::size_t len = rng() % 11;
        for (std::size_t i = 0; i < len; ++i) ls.push_back(letters[rng() % letters.size()]);
        SignedWord w(x3, ls);
        CHECK(free_reduce(free_reduce(w).word()) == free_reduce(w));
    }
}

TEST_CASE("free reduction is a morphism onto normal forms") {
    for (const auto& w : all_signed_words(X2, 8)) {
        const auto& ls = w.letters();
        for (std::size_t cut = 0; cut <= ls.size(); ++cut) {
            SignedWord u(X2, {ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(cut)});
            SignedWord v(X2, {ls.begin() + static_cast<std::ptrdiff_t>(cut), ls.end()});
            CHECK(free_reduce(w) == fg_multiply(free_reduce(u), free_reduce(v)));
        }
    }
}

TEST_CASE("free group multiplication laws") {
    CHECK(fg_multiply(free_reduce(sw(X2, "x y")), free_reduce(sw(X2, "y^-1"))).word().tokens() ==
          "x");
    CHECK(fg_multiply(FreeGroupElement(X2), free_reduce(sw(X2, "y x"))) ==
          free_reduce(sw(X2, "y x")));
    CHECK(fg_multiply(free_reduce(sw(X2, "x^-1")), free_reduce(sw(X2, "x y"))).word().tokens() ==
          "y");
    for (const auto& w : all_signed_words(X2, 5)) {
        auto g = free_reduce(w);
        CHECK(fg_multiply(g, fg_invert(g)).is_identity());
        CHECK(fg_multiply(fg_invert(g), g).is_identity());
    }
    CHECK_THROWS_AS(fg_multiply(free_reduce(sw(X1, "x")), free_reduce(sw(X2, "y"))),
                    AlphabetMismatch);
}

TEST_CASE("polycyclic evaluation of generators and zero") {
    CHECK(poly_eval(sw(X2, "x y^-1")).is_zero());
    CHECK(poly_eval(sw(X2, "x x^-1")).is_identity());

    auto e = poly_eval(sw(X2, "x^-1 x"));
    CHECK_FALSE(e.is_zero());
    CHECK_FALSE(e.is_identity());
    CHECK(e.pop() == Word{"x"});
    CHECK(e.push() == Word{"x"});
    CHECK(poly_multiply(e, e) == e);  // idempotent
    // Its graph on stacks of length ≤ 4: defined exactly on X*·x, fixing the
    // stack pointwise.
    for (const auto& stack : all_plain_words(X2, 4)) {
        auto image = apply_poly(e, stack);
        if (!stack.empty() && stack.back() == "x") {
            REQUIRE(image.has_value());
            CHECK(*image == stack);
        } else {
            CHECK_FALSE(image.has_value());
        }
    }
}

TEST_CASE("polycyclic multiplication rule examples") {
    auto push_x = PolycyclicElement::pair(X2, {}, {"x"});
    auto pop_x = PolycyclicElement::pair(X2, {"x"}, {});
    auto pop_y = PolycyclicElement::pair(X2, {"y"}, {});
    CHECK(poly_multiply(push_x, pop_y).is_zero());
    CHECK(poly_multiply(push_x, pop_x).is_identity());
    CHECK(poly_multiply(pop_x, push_x) == PolycyclicElement::pair(X2, {"x"}, {"x"}));
    auto zero = PolycyclicElement::zero(X2);
    CHECK(poly_multiply(zero, push_x).is_zero());
    CHECK(poly_multiply(push_x, zero).is_zero());
}

TEST_CASE("polycyclic multiplication agrees with pointwise composition") {
    // Elements reachable by words of length ≤ 4; the acceptance suite covers
    // the full length-5 table.
    std::set<PolycyclicElement> elements;
    for (const auto& w : all_signed_words(X2, 4)) elements.insert(poly_eval(w));
    auto stacks = all_plain_words(X2, 5);
    for (const auto& a : elements) {
        for (const auto& b : elements) {
            auto product = poly_multiply(a, b);
            for (const auto& s : stacks) {
                auto via_a = apply_poly(a, s);
                std::optional<Word> pointwise =
                    via_a ? apply_poly(b, *via_a) : std::nullopt;
                CHECK(pointwise == apply_poly(product, s));
            }
        }
    }
}

TEST_CASE("one-sided Dyck words are two-sided Dyck") {
    for (const auto& w : all_signed_words(X1, 10))
        if (poly_eval(w).is_identity()) CHECK(free_reduce(w).is_identity());
    for (const auto& w : all_signed_words(X2, 8))
        if (poly_eval(w).is_identity()) CHECK(free_reduce(w).is_identity());
    // The containment is strict.
    CHECK(free_reduce(sw(X1, "x^-1 x")).is_identity());
    CHECK_FALSE(poly_eval(sw(X1, "x^-1 x")).is_identity());
}

TEST_CASE("multiplication is associative") {
    std::set<PolycyclicElement> poly;
    std::set<FreeGroupElement> group;
    for (const auto& w : all_signed_words(X2, 3)) {
        poly.insert(poly_eval(w));
        group.insert(free_reduce(w));
    }
    for (const auto& a : poly)
        for (const auto& b : poly)
            for (const auto& c : poly)
                CHECK(poly_multiply(poly_multiply(a, b), c) ==
                      poly_multiply(a, poly_multiply(b, c)));
    for (const auto& a : group)
        for (const auto& b : group)
            for (const auto& c : group)
                CHECK(fg_multiply(fg_multiply(a, b), c) == fg_multiply(a, fg_multiply(b, c)));
}

TEST_CASE("integer vectors add componentwise and detect overflow") {
    IntVector a({1, -2}), b({-1, 2});
    CHECK(zn_add(a, b).is_identity());
    IntVector huge(std::vector<std::int64_t>{INT64_MAX});
    IntVector one(std::vector<std::int64_t>{1});
    CHECK_THROWS_AS(zn_add(huge, one), OverflowError);
    CHECK_THROWS_AS(zn_add(a, one), PreconditionError);

    auto names = MonoidSpec::free_abelian(2).generator_alphabet();
    CHECK(zn_eval(names, sw(names, "c0 c1^-1 c0")) == IntVector({2, -1}));
}

TEST_CASE("zero and identity predicates") {
    CHECK_FALSE(is_zero(RegisterElement(FreeGroupElement(X1))));
    CHECK(is_zero(RegisterElement(PolycyclicElement::zero(X1))));
    CHECK(is_identity(RegisterElement(TrivialElement{})));
    CHECK_FALSE(is_identity(RegisterElement(poly_eval(sw(X2, "x^-1 x")))));
}

TEST_CASE("product elements multiply componentwise") {
    MonoidSpec spec = MonoidSpec::product(
        {MonoidSpec::polycyclic(X2), MonoidSpec::free_abelian(1)});
    auto counter = spec.factors()[1].generator_alphabet();
    std::vector<SignedWord> left{sw(X2, "x"), sw(counter, "c0")};
    std::vector<SignedWord> right{sw(X2, "x^-1"), sw(counter, "c0^-1")};
    RegisterElement a = evaluate(spec, left);
    RegisterElement b = evaluate(spec, right);
    RegisterElement ab = multiply(a, b);
    CHECK(is_identity(ab));
    // A Zero in any part poisons the product: push x then pop y.
    std::vector<SignedWord> pop_y{sw(X2, "y^-1"), sw(counter, "c0")};
    CHECK(is_zero(multiply(a, evaluate(spec, pop_y))));
}

TEST_CASE("normal form sizes drive the search budget") {
    CHECK(normal_form_size(RegisterElement(free_reduce(sw(X2, "x y x")))) == 3);
    CHECK(normal_form_size(RegisterElement(poly_eval(sw(X2, "x^-1 x")))) == 2);
    CHECK(normal_form_size(RegisterElement(IntVector({3, -7}))) == 7);
}

TEST_CASE("register keys separate distinct normal forms") {
    std::set<std::string> keys;
    std::set<FreeGroupElement> elements;
    for (const auto& w : all_signed_words(X2, 4)) {
        keys.insert(register_key(RegisterElement(free_reduce(w))));
        elements.insert(free_reduce(w));
    }
    CHECK(keys.size() == elements.size());
}
