#include "valence/document.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace valence {

namespace {

using json = nlohmann::ordered_json;

json parse_text(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw DocumentError("(json)", "document is not valid JSON");
    if (!doc.is_object()) throw DocumentError("(json)", "document must be a JSON object");
    return doc;
}

const json& require(const json& obj, const std::string& key) {
    auto it = obj.find(key);
    if (it == obj.end()) throw DocumentError(key, "missing key '" + key + "'");
    return *it;
}

std::string require_string(const json& obj, const std::string& key) {
    const json& v = require(obj, key);
    if (!v.is_string()) throw DocumentError(key, "key '" + key + "' must be a string");
    return v.get<std::string>();
}

std::vector<std::string> require_string_array(const json& obj, const std::string& key) {
    const json& v = require(obj, key);
    if (!v.is_array()) throw DocumentError(key, "key '" + key + "' must be an array");
    std::vector<std::string> out;
    for (const auto& item : v) {
        if (!item.is_string())
            throw DocumentError(key, "key '" + key + "' must contain strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DocumentError("(file)", "cannot read '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DocumentError("(file)", "cannot write '" + path.string() + "'");
    out << text;
}

// ---- monoid descriptors ---------------------------------------------------

MonoidSpec monoid_from(const json& m) {
    if (!m.is_object()) throw DocumentError("monoid", "key 'monoid' must be an object");
    std::string type = require_string(m, "type");
    try {
        if (type == "trivial") return MonoidSpec::trivial();
        if (type == "free_group")
            return MonoidSpec::free_group(Alphabet(require_string_array(m, "alphabet")));
        if (type == "polycyclic")
            return MonoidSpec::polycyclic(Alphabet(require_string_array(m, "alphabet")));
        if (type == "free_abelian") {
            const json& r = require(m, "rank");
            if (!r.is_number_unsigned())
                throw DocumentError("rank", "key 'rank' must be a non-negative integer");
            std::optional<Alphabet> names;
            if (m.contains("alphabet"))
                names = Alphabet(require_string_array(m, "alphabet"));
            return MonoidSpec::free_abelian(r.get<std::size_t>(), std::move(names));
        }
        if (type == "product") {
            const json& fs = require(m, "factors");
            if (!fs.is_array())
                throw DocumentError("factors", "key 'factors' must be an array");
            std::vector<MonoidSpec> factors;
            for (const auto& f : fs) {
                if (!f.is_object())
                    throw DocumentError("factors", "each factor must be an object");
                factors.push_back(monoid_from(f));
            }
            return MonoidSpec::product(std::move(factors));
        }
    } catch (const Error& e) {
        if (dynamic_cast<const DocumentError*>(&e)) throw;
        throw DocumentError("monoid", e.what());
    }
    throw DocumentError("type", "unknown monoid type '" + type + "'");
}

json monoid_to(const MonoidSpec& spec) {
    json m;
    switch (spec.kind()) {
        case MonoidKind::Trivial: m["type"] = "trivial"; break;
        case MonoidKind::FreeGroup:
            m["type"] = "free_group";
            m["alphabet"] = spec.generator_alphabet().symbols();
            break;
        case MonoidKind::Polycyclic:
            m["type"] = "polycyclic";
            m["alphabet"] = spec.generator_alphabet().symbols();
            break;
        case MonoidKind::FreeAbelian:
            m["type"] = "free_abelian";
            m["rank"] = spec.rank();
            m["alphabet"] = spec.generator_alphabet().symbols();
            break;
        case MonoidKind::Product: {
            m["type"] = "product";
            json fs = json::array();
            for (const auto& f : spec.factors()) fs.push_back(monoid_to(f));
            m["factors"] = std::move(fs);
            break;
        }
    }
    return m;
}

std::string dump(const json& doc) {
    return doc.dump(2) + "\n";
}

}  // namespace

// ---------------------------------------------------------------------------
// Valence automata
// ---------------------------------------------------------------------------

std::string automaton_to_json(const ValenceAutomaton& a) {
    json doc;
    doc["kind"] = "valence";
    doc["monoid"] = monoid_to(a.monoid());
    doc["input_alphabet"] = a.input_alphabet().symbols();
    doc["states"] = a.state_names();
    doc["initial"] = a.state_names()[a.initial()];
    json finals = json::array();
    for (std::size_t s : a.final_states()) finals.push_back(a.state_names()[s]);
    doc["finals"] = std::move(finals);

    struct Row {
        std::string from, to, read;
        std::vector<std::string> mult;
        bool single;
    };
    std::vector<Row> rows;
    for (const auto& e : a.edges()) {
        Row r;
        r.from = a.state_names()[e.from];
        r.to = a.state_names()[e.to];
        r.read = e.read;
        for (const auto& p : e.mult.parts) r.mult.push_back(p.tokens());
        r.single = !a.monoid().is_product();
        rows.push_back(std::move(r));
    }
    std::sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) {
        return std::tie(x.from, x.to, x.mult, x.read) < std::tie(y.from, y.to, y.mult, y.read);
    });
    json edges = json::array();
    for (const auto& r : rows) {
        json e;
        e["from"] = r.from;
        e["to"] = r.to;
        if (r.single)
            e["mult"] = r.mult[0];
        else
            e["mult"] = r.mult;
        e["read"] = r.read;
        edges.push_back(std::move(e));
    }
    doc["edges"] = std::move(edges);
    return dump(doc);
}

ValenceAutomaton automaton_from_json(const std::string& text) {
    json doc = parse_text(text);
    if (require_string(doc, "kind") != "valence")
        throw DocumentError("kind", "expected kind 'valence'");
    MonoidSpec monoid = monoid_from(require(doc, "monoid"));
    auto rewrap = [](const std::string& key, auto&& make) {
        try {
            return make();
        } catch (const DocumentError&) {
            throw;
        } catch (const Error& err) {
            throw DocumentError(key, err.what());
        }
    };
    Alphabet input = rewrap("input_alphabet", [&] {
        return Alphabet(require_string_array(doc, "input_alphabet"));
    });
    ValenceAutomaton a = rewrap("states", [&] {
        return ValenceAutomaton(monoid, input, require_string_array(doc, "states"),
                                require_string(doc, "initial"),
                                require_string_array(doc, "finals"));
    });
    try {
        const json& edges = require(doc, "edges");
        if (!edges.is_array()) throw DocumentError("edges", "key 'edges' must be an array");
        for (const auto& e : edges) {
            if (!e.is_object()) throw DocumentError("edges", "each edge must be an object");
            Multiplier mult;
            const json& mv = require(e, "mult");
            if (mv.is_string()) {
                if (monoid.arity() != 1)
                    throw DocumentError("mult",
                                        "product monoids need one mult entry per factor");
                mult.parts.push_back(SignedWord::parse(
                    monoid.kind() == MonoidKind::Trivial ? Alphabet{}
                                                         : monoid.generator_alphabet(),
                    mv.get<std::string>()));
            } else if (mv.is_array()) {
                if (mv.size() != monoid.arity())
                    throw DocumentError("mult",
                                        "mult arity does not match the monoid's factors");
                for (std::size_t i = 0; i < mv.size(); ++i) {
                    if (!mv[i].is_string())
                        throw DocumentError("mult", "mult entries must be token strings");
                    const MonoidSpec& f = monoid.factor(i);
                    mult.parts.push_back(SignedWord::parse(
                        f.kind() == MonoidKind::Trivial ? Alphabet{}
                                                        : f.generator_alphabet(),
                        mv[i].get<std::string>()));
                }
            } else {
                throw DocumentError("mult", "key 'mult' must be a string or array");
            }
            a.add_edge(require_string(e, "from"), mult, require_string(e, "read"),
                       require_string(e, "to"));
        }
        return a;
    } catch (const DocumentError&) {
        throw;
    } catch (const Error& err) {
        throw DocumentError("edges", err.what());
    }
}

ValenceAutomaton load_automaton(const std::filesystem::path& path) {
    return automaton_from_json(read_file(path));
}

void save_automaton(const ValenceAutomaton& a, const std::filesystem::path& path) {
    write_file(path, automaton_to_json(a));
}

// ---------------------------------------------------------------------------
// Transducers
// ---------------------------------------------------------------------------

namespace {

std::string join_word(const Word& w) {
    std::string out;
    for (const auto& l : w) {
        if (!out.empty()) out += ' ';
        out += l;
    }
    return out;
}

Word word_from_tokens(const Alphabet& alphabet, const std::string& text,
                      const std::string& key) {
    Word out;
    for (auto& tok : split_tokens(text)) {
        if (!alphabet.contains(tok))
            throw DocumentError(key, "token '" + tok + "' not in the declared alphabet");
        out.push_back(std::move(tok));
    }
    return out;
}

}  // namespace

std::string transducer_to_json(const FiniteTransducer& t) {
    json doc;
    doc["kind"] = "transducer";
    doc["input_alphabet"] = t.input_alphabet().symbols();
    doc["output_alphabet"] = t.output_alphabet().symbols();
    doc["states"] = t.state_names();
    doc["initial"] = t.state_names()[t.initial()];
    json finals = json::array();
    for (std::size_t s = 0; s < t.state_count(); ++s)
        if (t.is_final(s)) finals.push_back(t.state_names()[s]);
    doc["finals"] = std::move(finals);

    struct Row {
        std::string from, to, in, out;
    };
    std::vector<Row> rows;
    for (const auto& e : t.edges())
        rows.push_back({t.state_names()[e.from], t.state_names()[e.to], join_word(e.in),
                        join_word(e.out)});
    std::sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) {
        return std::tie(x.from, x.to, x.in, x.out) < std::tie(y.from, y.to, y.in, y.out);
    });
    json edges = json::array();
    for (const auto& r : rows) {
        json e;
        e["from"] = r.from;
        e["to"] = r.to;
        e["in"] = r.in;
        e["out"] = r.out;
        edges.push_back(std::move(e));
    }
    doc["edges"] = std::move(edges);
    return dump(doc);
}

FiniteTransducer transducer_from_json(const std::string& text) {
    json doc = parse_text(text);
    if (require_string(doc, "kind") != "transducer")
        throw DocumentError("kind", "expected kind 'transducer'");
    try {
        Alphabet input(require_string_array(doc, "input_alphabet"));
        Alphabet output(require_string_array(doc, "output_alphabet"));
        FiniteTransducer t(input, output, require_string_array(doc, "states"),
                           require_string(doc, "initial"),
                           require_string_array(doc, "finals"));
        const json& edges = require(doc, "edges");
        if (!edges.is_array()) throw DocumentError("edges", "key 'edges' must be an array");
        for (const auto& e : edges) {
            if (!e.is_object()) throw DocumentError("edges", "each edge must be an object");
            t.add_edge(require_string(e, "from"),
                       word_from_tokens(input, require_string(e, "in"), "in"),
                       word_from_tokens(output, require_string(e, "out"), "out"),
                       require_string(e, "to"));
        }
        return t;
    } catch (const DocumentError&) {
        throw;
    } catch (const Error& err) {
        throw DocumentError("edges", err.what());
    }
}

FiniteTransducer load_transducer(const std::filesystem::path& path) {
    return transducer_from_json(read_file(path));
}

void save_transducer(const FiniteTransducer& t, const std::filesystem::path& path) {
    write_file(path, transducer_to_json(t));
}

// ---------------------------------------------------------------------------
// Grammars
// ---------------------------------------------------------------------------

std::string grammar_to_json(const ContextFreeGrammar& g) {
    json doc;
    doc["kind"] = "grammar";
    doc["nonterminals"] = g.nonterminals();
    doc["terminals"] = g.terminals();
    doc["start"] = g.start();
    json prods = json::array();
    for (const auto& p : g.productions()) {
        json item;
        item["lhs"] = p.lhs;
        item["rhs"] = p.rhs;
        prods.push_back(std::move(item));
    }
    doc["productions"] = std::move(prods);
    return dump(doc);
}

ContextFreeGrammar grammar_from_json(const std::string& text) {
    json doc = parse_text(text);
    if (require_string(doc, "kind") != "grammar")
        throw DocumentError("kind", "expected kind 'grammar'");
    try {
        const json& prods = require(doc, "productions");
        if (!prods.is_array())
            throw DocumentError("productions", "key 'productions' must be an array");
        std::vector<Production> productions;
        for (const auto& p : prods) {
            if (!p.is_object())
                throw DocumentError("productions", "each production must be an object");
            productions.push_back(
                {require_string(p, "lhs"), require_string_array(p, "rhs")});
        }
        return ContextFreeGrammar(require_string_array(doc, "nonterminals"),
                                  require_string_array(doc, "terminals"),
                                  require_string(doc, "start"), std::move(productions));
    } catch (const DocumentError&) {
        throw;
    } catch (const Error& err) {
        throw DocumentError("productions", err.what());
    }
}

void save_grammar(const ContextFreeGrammar& g, const std::filesystem::path& path) {
    write_file(path, grammar_to_json(g));
}

MonoidSpec monoid_from_json(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw DocumentError("(json)", "monoid is not valid JSON");
    return monoid_from(doc);
}

}  // namespace valence
