#include <algorithm>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "valence/constructions.hpp"
#include "valence/document.hpp"
#include "valence/dyck.hpp"
#include "valence/grammar.hpp"

namespace {

using namespace valence;

// Infers X from the base symbols of a token string, in order of first
// appearance, unless an explicit alphabet was given.
SignedWord parse_signed_word(const std::string& text, const std::string& declared) {
    std::vector<std::string> symbols;
    auto add = [&symbols](std::string s) {
        if (std::find(symbols.begin(), symbols.end(), s) == symbols.end())
            symbols.push_back(std::move(s));
    };
    if (!declared.empty()) {
        for (auto& tok : split_tokens(declared)) add(std::move(tok));
    } else {
        for (auto& tok : split_tokens(text)) {
            if (tok.size() > 3 && tok.ends_with("^-1"))
                add(tok.substr(0, tok.size() - 3));
            else
                add(std::move(tok));
        }
    }
    return SignedWord::parse(Alphabet(std::move(symbols)), text);
}

int print_yes_no(bool value) {
    std::cout << (value ? "YES" : "NO") << "\n";
    return value ? 0 : 1;
}

SearchBudget make_budget(std::size_t register_cap) {
    SearchBudget budget;
    budget.register_cap = register_cap;
    return budget;
}

std::vector<Word> length_lex(const std::set<Word>& words) {
    std::vector<Word> sorted(words.begin(), words.end());
    std::stable_sort(sorted.begin(), sorted.end(), [](const Word& a, const Word& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return sorted;
}

ContextFreeGrammar oracle_grammar(const ValenceAutomaton& a) {
    ValenceAutomaton normalized = normalize_multipliers(a);
    switch (a.monoid().kind()) {
        case MonoidKind::Polycyclic: return pda_to_cfg(normalized);
        case MonoidKind::FreeGroup: return pda_to_cfg(fg_automaton_to_pda(normalized));
        default:
            throw PreconditionError(
                "exact membership supports polycyclic and free_group registers only");
    }
}

ValenceAutomaton reinterpret_if_requested(ValenceAutomaton a, const std::string& tag) {
    if (tag.empty()) return a;
    MonoidKind kind = tag == "fg" ? MonoidKind::FreeGroup : MonoidKind::Polycyclic;
    return reinterpret_register(a, kind);
}

int run_member(const std::string& file, const std::string& word_text, std::size_t budget,
               bool exact) {
    ValenceAutomaton a = load_automaton(file);
    Word w = parse_word(a.input_alphabet(), word_text);
    if (exact) {
        bool member = cyk_member(cnf_transform(oracle_grammar(a)), w);
        std::cout << (member ? "ACCEPTED" : "REJECTED") << "\n";
        return member ? 0 : 1;
    }
    switch (accepts(a, w, make_budget(budget))) {
        case Outcome::Accepted: std::cout << "ACCEPTED\n"; return 0;
        case Outcome::Rejected: std::cout << "REJECTED\n"; return 1;
        case Outcome::BudgetExhausted: std::cout << "UNKNOWN\n"; return 2;
    }
    return 2;
}

int run_enum(const std::string& file, std::size_t max_len, std::size_t budget) {
    ValenceAutomaton a = load_automaton(file);
    Enumeration result = enumerate_language(a, max_len, make_budget(budget));
    for (const auto& w : length_lex(result.words)) std::cout << format_word(w) << "\n";
    if (!result.complete) {
        std::cerr << "warning: some membership queries exhausted the budget\n";
        return 2;
    }
    return 0;
}

int run_compare(const std::string& file1, const std::string& file2, std::size_t max_len,
                std::size_t budget, const std::string& register_tag) {
    ValenceAutomaton a1 = reinterpret_if_requested(load_automaton(file1), register_tag);
    ValenceAutomaton a2 = reinterpret_if_requested(load_automaton(file2), register_tag);
    Enumeration e1 = enumerate_language(a1, max_len, make_budget(budget));
    Enumeration e2 = enumerate_language(a2, max_len, make_budget(budget));
    bool differ = false;
    for (const auto& w : length_lex(e1.words))
        if (!e2.words.contains(w)) std::cout << "< " << format_word(w) << "\n", differ = true;
    for (const auto& w : length_lex(e2.words))
        if (!e1.words.contains(w)) std::cout << "> " << format_word(w) << "\n", differ = true;
    if (!e1.complete || !e2.complete) {
        std::cerr << "warning: some membership queries exhausted the budget\n";
        return 2;
    }
    return differ ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"valence automata: monoid-registered finite automata toolkit"};
    app.require_subcommand(1);
    int status = 0;

    // --- membership and enumeration ---------------------------------------
    auto* member = app.add_subcommand("member", "decide membership of a word");
    std::string member_file, member_word;
    std::size_t member_budget = 0;
    bool member_exact = false;
    member->add_option("file", member_file)->required();
    member->add_option("word", member_word)->required();
    member->add_option("--budget", member_budget, "register size cap (0 = default)");
    member->add_flag("--exact", member_exact, "use the grammar oracle");
    member->callback(
        [&] { status = run_member(member_file, member_word, member_budget, member_exact); });

    auto* enumerate = app.add_subcommand("enum", "enumerate the language up to a length");
    std::string enum_file;
    std::size_t enum_max_len = 0, enum_budget = 0;
    enumerate->add_option("file", enum_file)->required();
    enumerate->add_option("--max-len", enum_max_len)->required();
    enumerate->add_option("--budget", enum_budget, "register size cap (0 = default)");
    enumerate->callback([&] { status = run_enum(enum_file, enum_max_len, enum_budget); });

    auto* compare = app.add_subcommand("compare", "symmetric difference of two languages");
    std::string cmp_file1, cmp_file2, cmp_register;
    std::size_t cmp_max_len = 0, cmp_budget = 0;
    compare->add_option("file1", cmp_file1)->required();
    compare->add_option("file2", cmp_file2)->required();
    compare->add_option("--max-len", cmp_max_len)->required();
    compare->add_option("--budget", cmp_budget, "register size cap (0 = default)");
    compare->add_option("--register", cmp_register, "reinterpret registers as fg or poly")
        ->check(CLI::IsMember({"fg", "poly"}));
    compare->callback([&] {
        status = run_compare(cmp_file1, cmp_file2, cmp_max_len, cmp_budget, cmp_register);
    });

    // --- constructions ------------------------------------------------------
    auto* product = app.add_subcommand("product", "intersection via the product automaton");
    std::string prod_file1, prod_file2, prod_out;
    product->add_option("file1", prod_file1)->required();
    product->add_option("file2", prod_file2)->required();
    product->add_option("-o,--output", prod_out)->required();
    product->callback([&] {
        save_automaton(product_automaton(load_automaton(prod_file1), load_automaton(prod_file2)),
                       prod_out);
    });

    auto* pad_construct =
        app.add_subcommand("pad-construct", "padding construction over X ∪ {#}");
    std::string pc_file, pc_out, pc_register = "fg";
    pad_construct->add_option("file", pc_file)->required();
    pad_construct->add_option("-o,--output", pc_out)->required();
    pad_construct->add_option("--register", pc_register, "register tag of the result")
        ->check(CLI::IsMember({"fg", "poly"}));
    pad_construct->callback([&] {
        MonoidKind kind = pc_register == "poly" ? MonoidKind::Polycyclic : MonoidKind::FreeGroup;
        save_automaton(
            padding_construction(normalize_multipliers(load_automaton(pc_file)), kind), pc_out);
    });

    auto* normalize = app.add_subcommand("normalize", "subdivide multi-letter multipliers");
    std::string norm_file, norm_out;
    normalize->add_option("file", norm_file)->required();
    normalize->add_option("-o,--output", norm_out)->required();
    normalize->callback(
        [&] { save_automaton(normalize_multipliers(load_automaton(norm_file)), norm_out); });

    auto* to_grammar = app.add_subcommand("to-grammar", "convert to a context-free grammar");
    std::string tg_file, tg_out;
    bool tg_cnf = false;
    to_grammar->add_option("file", tg_file)->required();
    to_grammar->add_option("-o,--output", tg_out)->required();
    to_grammar->add_flag("--cnf", tg_cnf, "emit Chomsky normal form");
    to_grammar->callback([&] {
        ContextFreeGrammar g = oracle_grammar(load_automaton(tg_file));
        save_grammar(tg_cnf ? cnf_transform(g) : g, tg_out);
    });

    auto* to_transducer = app.add_subcommand("to-transducer", "view as a finite transducer");
    std::string tt_file, tt_out;
    to_transducer->add_option("file", tt_file)->required();
    to_transducer->add_option("-o,--output", tt_out)->required();
    to_transducer->callback(
        [&] { save_transducer(automaton_to_transducer(load_automaton(tt_file)), tt_out); });

    auto* from_transducer =
        app.add_subcommand("from-transducer", "rebuild an automaton from a transducer");
    std::string ft_file, ft_out, ft_monoid;
    from_transducer->add_option("file", ft_file)->required();
    from_transducer->add_option("-o,--output", ft_out)->required();
    from_transducer
        ->add_option("--monoid", ft_monoid, "monoid descriptor, e.g. "
                                            "{\"type\":\"polycyclic\",\"alphabet\":[\"x\"]}")
        ->required();
    from_transducer->callback([&] {
        save_automaton(transducer_to_automaton(normalize_labels(load_transducer(ft_file)),
                                               monoid_from_json(ft_monoid)),
                       ft_out);
    });

    // --- word predicates ----------------------------------------------------
    std::string word_text, alphabet_text;
    auto add_word_verb = [&](const std::string& name, const std::string& desc) {
        auto* cmd = app.add_subcommand(name, desc);
        cmd->add_option("word", word_text)->required();
        cmd->add_option("--alphabet", alphabet_text, "declare X explicitly");
        return cmd;
    };

    auto* dyck = add_word_verb("dyck", "Dyck language membership");
    bool one_sided = false, two_sided = false;
    dyck->add_flag("--one-sided", one_sided);
    dyck->add_flag("--two-sided", two_sided);
    dyck->callback([&] {
        if (one_sided == two_sided)
            throw CLI::ValidationError("dyck", "pass exactly one of --one-sided/--two-sided");
        SignedWord w = parse_signed_word(word_text, alphabet_text);
        status = print_yes_no(one_sided ? is_one_sided_dyck(w) : is_two_sided_dyck(w));
    });

    auto* minima_cmd = add_word_verb("minima", "minima of a word");
    minima_cmd->callback([&] {
        for (const auto& m : minima(parse_signed_word(word_text, alphabet_text))) {
            std::string tokens = m.word().tokens();
            std::cout << (tokens.empty() ? "ε" : tokens) << "\n";
        }
    });

    auto* prefix_positive = add_word_verb("prefix-positive",
                                          "are all prefixes positive or identity?");
    prefix_positive->callback([&] {
        status = print_yes_no(
            all_prefixes_positive_or_identity(parse_signed_word(word_text, alphabet_text)));
    });

    auto* pad = add_word_verb("pad", "canonical identity-representing padding");
    pad->callback([&] {
        PaddedWord padded = insert_padding(parse_signed_word(word_text, alphabet_text));
        std::cout << padded.word.tokens() << "\n";
    });

    auto* strip = add_word_verb("strip", "delete all padding symbols");
    strip->callback([&] {
        std::string tokens =
            strip_padding(parse_signed_word(word_text, alphabet_text)).tokens();
        std::cout << (tokens.empty() ? "ε" : tokens) << "\n";
    });

    auto* is_padding = app.add_subcommand("is-padding", "permissible-padding shape check");
    std::string padded_text, origin_text;
    is_padding->add_option("padded", padded_text)->required();
    is_padding->add_option("origin", origin_text)->required();
    is_padding->add_option("--alphabet", alphabet_text, "declare X explicitly");
    is_padding->callback([&] {
        SignedWord origin = parse_signed_word(origin_text, alphabet_text);
        Alphabet padded_alphabet = origin.alphabet().contains(kPaddingSymbol)
                                       ? origin.alphabet()
                                       : origin.alphabet().with(kPaddingSymbol);
        SignedWord padded = SignedWord::parse(padded_alphabet, padded_text);
        status = print_yes_no(is_permissible_padding(padded, origin));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 64;
    } catch (const DocumentError& e) {
        std::cerr << "error: " << e.what() << " [key: " << e.key << "]\n";
        return 65;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 65;
    }
    return status;
}
