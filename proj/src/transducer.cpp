#include "valence/transducer.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace valence {

FiniteTransducer::FiniteTransducer(Alphabet input_alphabet, Alphabet output_alphabet,
                                   std::vector<std::string> state_names,
                                   const std::string& initial,
                                   const std::vector<std::string>& finals)
    : input_(std::move(input_alphabet)), output_(std::move(output_alphabet)),
      states_(std::move(state_names)) {
    if (states_.empty()) throw PreconditionError("a transducer needs at least one state");
    {
        std::unordered_set<std::string> seen;
        for (const auto& s : states_)
            if (!seen.insert(s).second)
                throw PreconditionError("duplicate state name: '" + s + "'");
    }
    initial_ = state_id(initial);
    final_.resize(states_.size(), false);
    for (const auto& f : finals) final_[state_id(f)] = true;
}

std::size_t FiniteTransducer::state_id(const std::string& name) const {
    auto it = std::find(states_.begin(), states_.end(), name);
    if (it == states_.end()) throw PreconditionError("unknown state: '" + name + "'");
    return static_cast<std::size_t>(it - states_.begin());
}

void FiniteTransducer::add_edge(const std::string& from, Word in, Word out,
                                const std::string& to) {
    add_edge(state_id(from), std::move(in), std::move(out), state_id(to));
}

void FiniteTransducer::add_edge(std::size_t from, Word in, Word out, std::size_t to) {
    if (from >= states_.size() || to >= states_.size())
        throw PreconditionError("edge endpoint out of range");
    for (const auto& l : in)
        if (!input_.contains(l))
            throw ParseError("input letter '" + l + "' not in the input alphabet");
    for (const auto& l : out)
        if (!output_.contains(l))
            throw ParseError("output letter '" + l + "' not in the output alphabet");
    edges_.push_back({from, to, std::move(in), std::move(out)});
}

// --------------------------------------------------------------------------
// Application
// --------------------------------------------------------------------------

ImageResult image_of_word(const FiniteTransducer& t, const Word& u, std::size_t cap) {
    for (const auto& l : u)
        if (!t.input_alphabet().contains(l))
            throw ParseError("word letter '" + l + "' not in the input alphabet");

    struct Item {
        std::size_t state;
        std::size_t pos;
        Word out;
    };
    auto key_of = [](const Item& it) {
        std::string k = std::to_string(it.state) + "|" + std::to_string(it.pos) + "|";
        for (const auto& l : it.out) k += l + " ";
        return k;
    };

    ImageResult result;
    std::deque<Item> frontier{{t.initial(), 0, {}}};
    std::unordered_set<std::string> seen{key_of(frontier.front())};
    while (!frontier.empty()) {
        Item item = std::move(frontier.front());
        frontier.pop_front();
        if (item.pos == u.size() && t.is_final(item.state)) result.words.insert(item.out);
        for (const auto& e : t.edges()) {
            if (e.from != item.state) continue;
            if (e.in.size() > u.size() - item.pos) continue;
            if (!std::equal(e.in.begin(), e.in.end(), u.begin() + item.pos)) continue;
            if (item.out.size() + e.out.size() > cap) {
                result.truncated = true;
                continue;
            }
            Item next{e.to, item.pos + e.in.size(), item.out};
            next.out.insert(next.out.end(), e.out.begin(), e.out.end());
            if (seen.insert(key_of(next)).second) frontier.push_back(std::move(next));
        }
    }
    return result;
}

ImageResult image_of_language(const FiniteTransducer& t, const std::set<Word>& language,
                              std::size_t cap) {
    ImageResult result;
    for (const auto& u : language) {
        ImageResult one = image_of_word(t, u, cap);
        result.words.insert(one.words.begin(), one.words.end());
        result.truncated = result.truncated || one.truncated;
    }
    return result;
}

// --------------------------------------------------------------------------
// Normalization and composition
// --------------------------------------------------------------------------

FiniteTransducer normalize_labels(const FiniteTransducer& t) {
    std::vector<std::string> names = t.state_names();
    struct Pending {
        std::size_t from, to;
        Word in, out;
    };
    std::vector<Pending> simple;
    std::size_t fresh = 0;
    std::unordered_set<std::string> used(names.begin(), names.end());
    auto fresh_name = [&] {
        std::string name;
        do name = "·" + std::to_string(fresh++);
        while (!used.insert(name).second);
        return name;
    };
    std::vector<Pending> queue;
    for (const auto& e : t.edges()) queue.push_back({e.from, e.to, e.in, e.out});
    for (auto& p : queue) {
        while (p.in.size() > 1 || p.out.size() > 1) {
            // Peel one letter of input (or, failing that, of output).
            names.push_back(fresh_name());
            std::size_t mid = names.size() - 1;
            if (!p.in.empty()) {
                Word head_out;
                if (p.in.size() == 1 && !p.out.empty()) {
                    head_out = {p.out.front()};
                    p.out.erase(p.out.begin());
                }
                simple.push_back({p.from, mid, {p.in.front()}, std::move(head_out)});
                p.in.erase(p.in.begin());
            } else {
                simple.push_back({p.from, mid, {}, {p.out.front()}});
                p.out.erase(p.out.begin());
            }
            p.from = mid;
        }
        simple.push_back(std::move(p));
    }

    std::vector<std::string> finals;
    for (std::size_t s = 0; s < t.state_count(); ++s)
        if (t.is_final(s)) finals.push_back(t.state_names()[s]);
    FiniteTransducer out(t.input_alphabet(), t.output_alphabet(), names,
                         t.state_names()[t.initial()], finals);
    for (auto& p : simple) out.add_edge(p.from, std::move(p.in), std::move(p.out), p.to);
    return out;
}

FiniteTransducer compose(const FiniteTransducer& r, const FiniteTransducer& s) {
    if (r.output_alphabet() != s.input_alphabet())
        throw AlphabetMismatch("composition requires matching middle alphabets");
    FiniteTransducer rn = normalize_labels(r);
    FiniteTransducer sn = normalize_labels(s);

    std::vector<std::string> names;
    names.reserve(rn.state_count() * sn.state_count());
    for (const auto& p : rn.state_names())
        for (const auto& q : sn.state_names()) names.push_back("(" + p + "," + q + ")");
    auto pair_id = [&](std::size_t p, std::size_t q) { return p * sn.state_count() + q; };

    std::vector<std::string> finals;
    for (std::size_t p = 0; p < rn.state_count(); ++p)
        for (std::size_t q = 0; q < sn.state_count(); ++q)
            if (rn.is_final(p) && sn.is_final(q)) finals.push_back(names[pair_id(p, q)]);

    FiniteTransducer out(rn.input_alphabet(), sn.output_alphabet(), names,
                         names[pair_id(rn.initial(), sn.initial())], finals);
    for (std::size_t q = 0; q < sn.state_count(); ++q) {
        for (const auto& re : rn.edges()) {
            if (re.out.empty()) {
                // r moves silently on the middle tape; s stays.
                out.add_edge(pair_id(re.from, q), re.in, {}, pair_id(re.to, q));
            } else {
                // Synchronize on the single middle letter.
                for (const auto& se : sn.edges())
                    if (se.from == q && se.in == re.out)
                        out.add_edge(pair_id(re.from, q), re.in, se.out,
                                     pair_id(re.to, se.to));
            }
        }
    }
    for (std::size_t p = 0; p < rn.state_count(); ++p)
        for (const auto& se : sn.edges())
            if (se.in.empty())
                out.add_edge(pair_id(p, se.from), {}, se.out, pair_id(p, se.to));
    return out;
}

// --------------------------------------------------------------------------
// Alphabetic morphisms
// --------------------------------------------------------------------------

AlphabeticMorphism::AlphabeticMorphism(Alphabet from, Alphabet to,
                                       std::map<std::string, std::string> mapping)
    : from_(std::move(from)), to_(std::move(to)), mapping_(std::move(mapping)) {
    for (const auto& letter : from_.symbols()) {
        auto it = mapping_.find(letter);
        if (it == mapping_.end())
            throw PreconditionError("morphism is not total: no image for '" + letter + "'");
        if (!it->second.empty() && !to_.contains(it->second))
            throw PreconditionError("morphism image '" + it->second +
                                    "' not in the target alphabet");
    }
}

const std::string& AlphabeticMorphism::image(const std::string& letter) const {
    auto it = mapping_.find(letter);
    if (it == mapping_.end()) throw PreconditionError("letter '" + letter + "' has no image");
    return it->second;
}

Word AlphabeticMorphism::apply(const Word& w) const {
    Word out;
    for (const auto& l : w) {
        const std::string& img = image(l);
        if (!img.empty()) out.push_back(img);
    }
    return out;
}

std::set<Word> morphism_image(const AlphabeticMorphism& m, const std::set<Word>& language) {
    std::set<Word> out;
    for (const auto& w : language) out.insert(m.apply(w));
    return out;
}

FiniteTransducer morphism_to_transducer(const AlphabeticMorphism& m) {
    FiniteTransducer t(m.from(), m.to(), {"q"}, "q", {"q"});
    for (const auto& letter : m.from().symbols()) {
        const std::string& img = m.image(letter);
        t.add_edge(std::size_t{0}, {letter}, img.empty() ? Word{} : Word{img}, std::size_t{0});
    }
    return t;
}

}  // namespace valence
