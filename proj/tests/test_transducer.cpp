#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "valence/transducer.hpp"

using namespace valence;
using namespace valence::test;

namespace {

const Alphabet AB{{"a", "b"}};

FiniteTransducer identity_transducer(const Alphabet& a) {
    FiniteTransducer t(a, a, {"q"}, "q", {"q"});
    for (const auto& s : a.symbols()) t.add_edge(std::size_t{0}, {s}, {s}, std::size_t{0});
    return t;
}

Word word_of(const std::string& letters) {
    Word w;
    for (char c : letters) w.push_back(std::string(1, c));
    return w;
}

// The recognised relation restricted to bounded input/output lengths.
std::set<std::pair<Word, Word>> relation(const FiniteTransducer& t, std::size_t max_in,
                                         std::size_t max_out) {
    std::set<std::pair<Word, Word>> pairs;
    for (const auto& u : all_plain_words(t.input_alphabet(), max_in))
        for (const auto& v : image_of_word(t, u, max_out).words) pairs.insert({u, v});
    return pairs;
}

FiniteTransducer random_transducer(std::mt19937& rng, const Alphabet& in,
                                   const Alphabet& out) {
    std::size_t n = 1 + rng() % 3;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("s" + std::to_string(i));
    std::vector<std::string> finals{names[rng() % n]};
    FiniteTransducer t(in, out, names, names[0], finals);
    std::size_t edges = 2 + rng() % 4;
    for (std::size_t i = 0; i < edges; ++i) {
        Word u, v;
        for (std::size_t k = rng() % 3; k > 0; --k)
            u.push_back(in.symbols()[rng() % in.size()]);
        for (std::size_t k = rng() % 3; k > 0; --k)
            v.push_back(out.symbols()[rng() % out.size()]);
        t.add_edge(rng() % n, u, v, rng() % n);
    }
    return t;
}

}  // namespace

TEST_CASE("images of single words") {
    FiniteTransducer id = identity_transducer(AB);
    CHECK(image_of_word(id, word_of("ab"), 5).words == std::set<Word>{word_of("ab")});
    for (const auto& u : all_plain_words(AB, 6))
        CHECK(image_of_word(id, u, 6).words == std::set<Word>{u});

    // Erasing morphism a ↦ ε, b ↦ b as a transducer.
    AlphabeticMorphism erase_a(AB, Alphabet{{"b"}}, {{"a", ""}, {"b", "b"}});
    FiniteTransducer t = morphism_to_transducer(erase_a);
    CHECK(image_of_word(t, word_of("abab"), 5).words == std::set<Word>{word_of("bb")});
}

TEST_CASE("output caps report truncation") {
    FiniteTransducer id = identity_transducer(AB);
    ImageResult r = image_of_word(id, word_of("abab"), 2);
    CHECK(r.words.empty());
    CHECK(r.truncated);
    // An ε-input b-emitting loop has an infinite image; the cap bounds it.
    FiniteTransducer pump(AB, AB, {"q"}, "q", {"q"});
    pump.add_edge(std::size_t{0}, {}, {"b"}, std::size_t{0});
    ImageResult pumped = image_of_word(pump, {}, 3);
    CHECK(pumped.words ==
          std::set<Word>{{}, word_of("b"), word_of("bb"), word_of("bbb")});
    CHECK(pumped.truncated);
}

TEST_CASE("image of a language is the union of word images") {
    AlphabeticMorphism drop_b(AB, Alphabet{{"a"}}, {{"a", "a"}, {"b", ""}});
    FiniteTransducer t = morphism_to_transducer(drop_b);
    std::set<Word> language{word_of("ab"), word_of("ba"), word_of("bb")};
    CHECK(image_of_language(t, language, 4).words ==
          std::set<Word>{word_of("a"), {}});
}

TEST_CASE("composition matches relational composition extensionally") {
    std::mt19937 rng(987654);
    FiniteTransducer id = identity_transducer(AB);
    for (int trial = 0; trial < 4; ++trial) {
        FiniteTransducer t = random_transducer(rng, AB, AB);
        CHECK(relation(compose(id, t), 4, 4) == relation(t, 4, 4));
        CHECK(relation(compose(t, id), 4, 4) == relation(t, 4, 4));
    }

    // Morphism composition: (a ↦ x) then (x ↦ y) is (a ↦ y).
    Alphabet A{{"a"}}, X{{"x"}}, Y{{"y"}};
    FiniteTransducer ax = morphism_to_transducer(AlphabeticMorphism(A, X, {{"a", "x"}}));
    FiniteTransducer xy = morphism_to_transducer(AlphabeticMorphism(X, Y, {{"x", "y"}}));
    FiniteTransducer ay = morphism_to_transducer(AlphabeticMorphism(A, Y, {{"a", "y"}}));
    CHECK(relation(compose(ax, xy), 4, 4) == relation(ay, 4, 4));

    // Middle alphabets must agree.
    CHECK_THROWS_AS(compose(ax, ax), AlphabetMismatch);
}

TEST_CASE("composition is associative on bounded relations") {
    std::mt19937 rng(13579);
    for (int trial = 0; trial < 3; ++trial) {
        FiniteTransducer r = random_transducer(rng, AB, AB);
        FiniteTransducer s = random_transducer(rng, AB, AB);
        FiniteTransducer t = random_transducer(rng, AB, AB);
        CHECK(relation(compose(compose(r, s), t), 4, 4) ==
              relation(compose(r, compose(s, t)), 4, 4));
    }
}

TEST_CASE("normalization preserves the relation") {
    std::mt19937 rng(24680);
    for (int trial = 0; trial < 5; ++trial) {
        FiniteTransducer t = random_transducer(rng, AB, AB);
        FiniteTransducer n = normalize_labels(t);
        for (const auto& e : n.edges()) {
            CHECK(e.in.size() <= 1);
            CHECK(e.out.size() <= 1);
        }
        CHECK(relation(n, 4, 4) == relation(t, 4, 4));
    }
}

TEST_CASE("alphabetic morphisms") {
    AlphabeticMorphism m(AB, AB, {{"a", "a"}, {"b", ""}});
    CHECK(morphism_image(m, {word_of("ab"), word_of("ba")}) == std::set<Word>{word_of("a")});
    AlphabeticMorphism id(AB, AB, {{"a", "a"}, {"b", "b"}});
    std::set<Word> language{word_of("ab"), word_of("bb"), {}};
    CHECK(morphism_image(id, language) == language);
    CHECK_THROWS_AS(AlphabeticMorphism(AB, AB, {{"a", "a"}}), PreconditionError);

    // Inverse images distribute over intersection.
    std::mt19937 rng(112358);
    auto inverse_image = [&](const std::set<Word>& K) {
        std::set<Word> out;
        for (const auto& u : all_plain_words(AB, 5))
            if (K.contains(m.apply(u))) out.insert(u);
        return out;
    };
    auto universe = all_plain_words(AB, 3);
    for (int trial = 0; trial < 5; ++trial) {
        std::set<Word> k1, k2;
        for (const auto& w : universe) {
            if (rng() % 2) k1.insert(w);
            if (rng() % 2) k2.insert(w);
        }
        std::set<Word> both;
        for (const auto& w : k1)
            if (k2.contains(w)) both.insert(w);
        std::set<Word> lhs = inverse_image(both);
        std::set<Word> rhs;
        for (const auto& w : inverse_image(k1))
            if (inverse_image(k2).contains(w)) rhs.insert(w);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("the padded Figure-1 machine as a transducer maps its padding to ab") {
    Alphabet gens = doubled_alphabet(Alphabet{{"x", "#"}});
    FiniteTransducer t(gens, AB, {"q+", "q-"}, "q+", {"q-"});
    t.add_edge("q+", {"x", "#"}, {"a"}, "q+");
    t.add_edge("q-", {"x^-1", "#"}, {"b"}, "q+");
    t.add_edge("q+", {}, {}, "q-");
    t.add_edge("q-", {"#^-1"}, {}, "q-");
    Word padding{"x", "#", "#^-1", "x^-1", "#", "#^-1"};
    auto image = image_of_word(t, padding, 5).words;
    CHECK(image.contains(word_of("ab")));
}
