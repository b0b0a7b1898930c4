#include "valence/constructions.hpp"

#include <unordered_set>

#include "valence/dyck.hpp"

namespace valence {

// --------------------------------------------------------------------------
// Product (intersection)
// --------------------------------------------------------------------------

ValenceAutomaton product_automaton(const ValenceAutomaton& a1, const ValenceAutomaton& a2) {
    if (a1.input_alphabet() != a2.input_alphabet())
        throw AlphabetMismatch("product requires the same input alphabet");

    MonoidSpec monoid = MonoidSpec::product_of(a1.monoid(), a2.monoid());
    std::vector<std::string> names;
    names.reserve(a1.state_count() * a2.state_count());
    for (const auto& p : a1.state_names())
        for (const auto& q : a2.state_names()) names.push_back("(" + p + "," + q + ")");
    auto pair_id = [&](std::size_t p, std::size_t q) { return p * a2.state_count() + q; };

    std::vector<std::string> finals;
    for (std::size_t p = 0; p < a1.state_count(); ++p)
        for (std::size_t q = 0; q < a2.state_count(); ++q)
            if (a1.is_final(p) && a2.is_final(q)) finals.push_back(names[pair_id(p, q)]);

    ValenceAutomaton out(std::move(monoid), a1.input_alphabet(), names,
                         names[pair_id(a1.initial(), a2.initial())], finals);

    auto joined = [&](const Multiplier& left, const Multiplier& right) {
        Multiplier m = left;
        m.parts.insert(m.parts.end(), right.parts.begin(), right.parts.end());
        return m;
    };
    const Multiplier id1 = Multiplier::identity(a1.monoid());
    const Multiplier id2 = Multiplier::identity(a2.monoid());

    // Synchronized moves on a shared input letter.
    for (const auto& e1 : a1.edges()) {
        if (e1.read.empty()) continue;
        for (const auto& e2 : a2.edges()) {
            if (e2.read != e1.read) continue;
            out.add_edge(pair_id(e1.from, e2.from), joined(e1.mult, e2.mult), e1.read,
                         pair_id(e1.to, e2.to));
        }
    }
    // Asynchronous ε-moves of either factor.
    for (const auto& e1 : a1.edges()) {
        if (!e1.read.empty()) continue;
        for (std::size_t q = 0; q < a2.state_count(); ++q)
            out.add_edge(pair_id(e1.from, q), joined(e1.mult, id2), "", pair_id(e1.to, q));
    }
    for (const auto& e2 : a2.edges()) {
        if (!e2.read.empty()) continue;
        for (std::size_t p = 0; p < a1.state_count(); ++p)
            out.add_edge(pair_id(p, e2.from), joined(id1, e2.mult), "", pair_id(p, e2.to));
    }
    return out;
}

// --------------------------------------------------------------------------
// Multiplier normalization
// --------------------------------------------------------------------------

ValenceAutomaton normalize_multipliers(const ValenceAutomaton& a) {
    struct Pending {
        std::size_t from, to;
        Multiplier mult;
        std::string read;
    };
    std::vector<std::string> names = a.state_names();
    std::unordered_set<std::string> used(names.begin(), names.end());

    std::vector<Pending> simple;
    for (std::size_t ei = 0; ei < a.edges().size(); ++ei) {
        const Edge& e = a.edges()[ei];
        if (e.mult.total_length() <= 1) {
            simple.push_back({e.from, e.to, e.mult, e.read});
            continue;
        }
        // Flatten the multiplier into single letters, one sub-edge each; the
        // input letter rides on the first sub-edge.
        std::vector<Multiplier> steps;
        for (std::size_t f = 0; f < e.mult.parts.size(); ++f) {
            for (const auto& letter : e.mult.parts[f].letters()) {
                Multiplier m = Multiplier::identity(a.monoid());
                m.parts[f] = SignedWord(e.mult.parts[f].alphabet(), {letter});
                steps.push_back(std::move(m));
            }
        }
        std::size_t current = e.from;
        for (std::size_t k = 0; k < steps.size(); ++k) {
            std::size_t target;
            if (k + 1 == steps.size()) {
                target = e.to;
            } else {
                std::string name = a.state_names()[e.from] + "·" + std::to_string(ei) +
                                   "·" + std::to_string(k + 1);
                while (!used.insert(name).second) name += "'";
                names.push_back(name);
                target = names.size() - 1;
            }
            simple.push_back({current, target, std::move(steps[k]), k == 0 ? e.read : ""});
            current = target;
        }
    }

    std::vector<std::string> finals;
    for (std::size_t s = 0; s < a.state_count(); ++s)
        if (a.is_final(s)) finals.push_back(a.state_names()[s]);
    ValenceAutomaton out(a.monoid(), a.input_alphabet(), names,
                         a.state_names()[a.initial()], finals);
    for (auto& p : simple) out.add_edge(p.from, std::move(p.mult), std::move(p.read), p.to);
    return out;
}

// --------------------------------------------------------------------------
// Transducer correspondence
// --------------------------------------------------------------------------

FiniteTransducer automaton_to_transducer(const ValenceAutomaton& a) {
    if (a.monoid().is_product())
        throw PreconditionError("transducer view requires a single register monoid");
    Alphabet generators = doubled_alphabet(a.monoid().generator_alphabet());

    std::vector<std::string> finals;
    for (std::size_t s = 0; s < a.state_count(); ++s)
        if (a.is_final(s)) finals.push_back(a.state_names()[s]);
    FiniteTransducer t(std::move(generators), a.input_alphabet(), a.state_names(),
                       a.state_names()[a.initial()], finals);
    for (const auto& e : a.edges())
        t.add_edge(e.from, to_token_word(e.mult.parts[0]),
                   e.read.empty() ? Word{} : Word{e.read}, e.to);
    return t;
}

ValenceAutomaton transducer_to_automaton(const FiniteTransducer& t, const MonoidSpec& monoid) {
    if (monoid.is_product())
        throw PreconditionError("transducer view requires a single register monoid");
    std::vector<std::string> finals;
    for (std::size_t s = 0; s < t.state_count(); ++s)
        if (t.is_final(s)) finals.push_back(t.state_names()[s]);
    ValenceAutomaton a(monoid, t.output_alphabet(), t.state_names(),
                       t.state_names()[t.initial()], finals);
    const Alphabet& base = monoid.kind() == MonoidKind::Trivial
                               ? Alphabet{}
                               : monoid.generator_alphabet();
    for (const auto& e : t.edges()) {
        if (e.out.size() > 1)
            throw PreconditionError(
                "edge outputs must carry at most one letter; normalize the transducer first");
        a.add_edge(e.from, Multiplier::single(from_token_word(base, e.in)),
                   e.out.empty() ? "" : e.out[0], e.to);
    }
    return a;
}

FiniteTransducer generator_change_transducer(
    const Alphabet& from_generators, const Alphabet& to_generators,
    const std::vector<std::pair<SignedWord, SignedLetter>>& pairs) {
    FiniteTransducer t(doubled_alphabet(from_generators), doubled_alphabet(to_generators),
                       {"q"}, "q", {"q"});
    for (const auto& [word, letter] : pairs) {
        if (word.alphabet() != from_generators)
            throw AlphabetMismatch("replacement word not over the source generators");
        if (!to_generators.contains(letter.symbol))
            throw AlphabetMismatch("replaced generator not in the target alphabet");
        t.add_edge(std::size_t{0}, to_token_word(word), {letter.token()}, std::size_t{0});
    }
    return t;
}

// --------------------------------------------------------------------------
// Register reinterpretation and the padding construction
// --------------------------------------------------------------------------

ValenceAutomaton reinterpret_register(const ValenceAutomaton& a, MonoidKind kind) {
    MonoidSpec target = [&] {
        switch (kind) {
            case MonoidKind::FreeGroup:
                return MonoidSpec::free_group(a.monoid().generator_alphabet());
            case MonoidKind::Polycyclic:
                return MonoidSpec::polycyclic(a.monoid().generator_alphabet());
            default:
                throw PreconditionError("registers can be reinterpreted as fg or poly only");
        }
    }();
    std::vector<std::string> finals;
    for (std::size_t s = 0; s < a.state_count(); ++s)
        if (a.is_final(s)) finals.push_back(a.state_names()[s]);
    ValenceAutomaton out(std::move(target), a.input_alphabet(), a.state_names(),
                         a.state_names()[a.initial()], finals);
    for (const auto& e : a.edges()) out.add_edge(e.from, e.mult, e.read, e.to);
    return out;
}

ValenceAutomaton padding_construction(const ValenceAutomaton& a, MonoidKind target) {
    if (a.monoid().kind() != MonoidKind::Polycyclic)
        throw PreconditionError("the padding construction starts from a polycyclic automaton");
    for (const auto& e : a.edges())
        if (e.mult.total_length() > 1)
            throw PreconditionError(
                "multipliers must be single generators or ε; normalize first");

    if (target != MonoidKind::Polycyclic && target != MonoidKind::FreeGroup)
        throw PreconditionError("target register must be fg or poly");
    const Alphabet& base = a.monoid().generator_alphabet();
    Alphabet padded = base.with(kPaddingSymbol);
    MonoidSpec monoid = target == MonoidKind::Polycyclic ? MonoidSpec::polycyclic(padded)
                                                         : MonoidSpec::free_group(padded);

    // States Q+ ∪ Q-.
    std::vector<std::string> names;
    names.reserve(a.state_count() * 2);
    for (const auto& q : a.state_names()) names.push_back(q + "+");
    for (const auto& q : a.state_names()) names.push_back(q + "-");
    auto plus = [&](std::size_t q) { return q; };
    auto minus = [&](std::size_t q) { return a.state_count() + q; };

    std::vector<std::string> finals;
    for (std::size_t s = 0; s < a.state_count(); ++s)
        if (a.is_final(s)) finals.push_back(names[minus(s)]);
    ValenceAutomaton out(std::move(monoid), a.input_alphabet(), names,
                         names[plus(a.initial())], finals);

    const SignedLetter marker{kPaddingSymbol, +1};
    for (const auto& e : a.edges()) {
        if (e.mult.is_epsilon()) {
            out.add_edge(plus(e.from), Multiplier::single(SignedWord(padded)), e.read,
                         plus(e.to));
            continue;
        }
        SignedLetter g = e.mult.parts[0].letters()[0];
        SignedWord with_marker(padded, {g, marker});
        if (g.sign > 0)
            out.add_edge(plus(e.from), Multiplier::single(std::move(with_marker)), e.read,
                         plus(e.to));
        else
            out.add_edge(minus(e.from), Multiplier::single(std::move(with_marker)), e.read,
                         plus(e.to));
    }
    for (std::size_t q = 0; q < a.state_count(); ++q) {
        out.add_edge(plus(q), Multiplier::single(SignedWord(padded)), "", minus(q));
        out.add_edge(minus(q),
                     Multiplier::single(SignedWord(padded, {marker.inverse()})), "",
                     minus(q));
    }
    return out;
}

}  // namespace valence
