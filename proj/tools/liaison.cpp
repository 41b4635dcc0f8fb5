#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

#include "liaison/report.hpp"
#include "liaison/verify.hpp"

using namespace liaison;

namespace {

struct GlobalOptions {
    std::uint32_t modulus = kDefaultModulus;
    std::string vars = "x,y,z";
    std::string order = "grevlex";
    bool json_output = false;
    std::uint64_t seed = 0;
};

RingPtr build_ring(const GlobalOptions& g) {
    std::vector<std::string> names;
    std::string cur;
    for (char c : g.vars) {
        if (c == ',') {
            if (!cur.empty()) names.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) names.push_back(cur);
    if (names.empty()) throw input_error("empty variable list");
    MonomialOrder ord;
    int n = static_cast<int>(names.size());
    if (g.order == "grevlex") {
        ord = MonomialOrder::grevlex(n);
    } else if (g.order == "grlex") {
        ord = MonomialOrder::grlex(n);
    } else {
        throw input_error("unknown monomial order: " + g.order);
    }
    return Ring::make(n, g.modulus, ord, names);
}

Ideal make_family(const std::string& name, int n, const RingPtr& ring) {
    if (name == "I") return make_I(n, ring);
    if (name == "J") return make_J(n, ring);
    if (name == "L") return make_L(n, ring);
    if (name == "Jprime") return make_Jprime(n, ring);
    if (name == "hmnu") return make_hmnu(FamilyParams{n, std::nullopt, {}, {}, {}, {}, {}, {}}, ring);
    throw input_error("unknown family '" + name + "' (expected I, J, L, Jprime, or hmnu)");
}

Ideal resolve_ideal(const std::string& ideal_text, const std::string& family, int n,
                    const RingPtr& ring) {
    if (!ideal_text.empty() && !family.empty())
        throw input_error("give either --ideal or --family, not both");
    if (!ideal_text.empty()) return Ideal::from_text(ideal_text, ring);
    if (!family.empty()) return make_family(family, n, ring);
    throw input_error("an ideal is required (--ideal or --family)");
}

void emit(const json& j, const std::string& text, bool as_json) {
    if (as_json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

std::vector<ChainStepInput> parse_type_steps(const std::string& spec) {
    std::vector<ChainStepInput> out;
    std::string part;
    auto flush = [&]() {
        if (part.find_first_not_of(" \t") == std::string::npos) return;
        std::vector<int> degs;
        std::string num;
        for (char c : part + ",") {
            if (c == ',') {
                if (!num.empty()) degs.push_back(std::stoi(num));
                num.clear();
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                num += c;
            } else if (!std::isspace(static_cast<unsigned char>(c))) {
                throw input_error("bad type list: " + part);
            }
        }
        out.push_back(ChainStepInput::of_type(CIType(degs)));
        part.clear();
    };
    for (char c : spec) {
        if (c == ';') {
            flush();
        } else {
            part += c;
        }
    }
    flush();
    return out;
}

std::vector<ChainStepInput> parse_gens_steps(const std::string& spec, const RingPtr& ring) {
    std::vector<ChainStepInput> out;
    std::string part;
    auto flush = [&]() {
        if (part.find_first_not_of(" \t") == std::string::npos) return;
        out.push_back(ChainStepInput::of_gens(parse_generators(part, ring)));
        part.clear();
    };
    for (char c : spec) {
        if (c == '|') {
            flush();
        } else {
            part += c;
        }
    }
    flush();
    return out;
}

std::string hf_text(const HilbertFunction& hf) {
    std::string out;
    for (std::size_t j = 0; j < hf.values.size(); ++j)
        out += std::to_string(j) + ": " + std::to_string(hf.values[j]) + "\n";
    return out;
}

std::string ideal_text(const Ideal& ideal) {
    std::string out;
    for (std::size_t k = 0; k < ideal.generators().size(); ++k)
        out += (k ? ", " : "") + ideal.generators()[k].str();
    return out + "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact linkage computations for homogeneous ideals over a prime field"};
    app.require_subcommand(1);

    GlobalOptions g;
    if (const char* env = std::getenv("LIAISON_MODULUS")) g.modulus = std::atoi(env);
    app.add_option("--modulus", g.modulus, "prime field characteristic");
    app.add_option("--vars", g.vars, "comma-separated variable names (default x,y,z)");
    app.add_option("--order", g.order, "monomial order: grevlex or grlex");
    app.add_flag("--json", g.json_output, "emit JSON instead of text");
    app.add_option("--seed", g.seed, "seed for all generic choices");

    std::string ideal_text_opt, family_opt, ci_text, by_text, steps_types, steps_gens;
    int n = 4;
    int jmax = -1;
    bool paper_steps = false;
    std::string family_positional;

    auto* betti = app.add_subcommand("betti", "graded Betti table of R/I");
    betti->add_option("--ideal", ideal_text_opt, "generators in the text grammar");
    betti->add_option("--family", family_opt, "family name: I, J, L, Jprime, hmnu");
    betti->add_option("--n", n, "family parameter");

    auto* hf = app.add_subcommand("hf", "Hilbert function of R/I");
    hf->add_option("--ideal", ideal_text_opt, "generators in the text grammar");
    hf->add_option("--family", family_opt, "family name");
    hf->add_option("--n", n, "family parameter");
    hf->add_option("--jmax", jmax, "largest degree to report");

    auto* link = app.add_subcommand("link", "direct link C : I by a regular sequence");
    link->add_option("--ideal", ideal_text_opt, "the ideal I");
    link->add_option("--family", family_opt, "family name for I");
    link->add_option("--n", n, "family parameter");
    link->add_option("--ci", ci_text, "regular sequence generators")->required();

    auto* colon = app.add_subcommand("colon", "colon ideal I : J");
    colon->add_option("--ideal", ideal_text_opt, "the ideal I")->required();
    colon->add_option("--by", by_text, "the ideal J")->required();

    auto* chain = app.add_subcommand("chain", "verify a chain of links");
    chain->add_option("--ideal", ideal_text_opt, "starting ideal");
    chain->add_option("--family", family_opt, "family name for the start");
    chain->add_option("--n", n, "family parameter");
    chain->add_option("--steps", steps_types, "semicolon-separated CI types, e.g. '2,5,12; 2,4,12'");
    chain->add_option("--steps-gens", steps_gens,
                      "pipe-separated explicit regular sequences, e.g. 'x^2,y^9,z^12 | ...'");
    chain->add_flag("--paper-steps", paper_steps, "use the explicit chain for family Jprime");

    auto* inverse = app.add_subcommand("inverse", "Macaulay inverse system of I");
    inverse->add_option("--ideal", ideal_text_opt, "generators in the text grammar");
    inverse->add_option("--family", family_opt, "family name");
    inverse->add_option("--n", n, "family parameter");
    inverse->add_option("--jmax", jmax, "degree cap (required for non-m-primary input)");

    auto* family = app.add_subcommand("family", "emit a family ideal in the text grammar");
    family->add_option("name", family_positional, "family name: I, J, L, Jprime, hmnu")
        ->required();
    family->add_option("--n", n, "family parameter");

    auto* verify = app.add_subcommand("verify-paper", "run the paper-reproduction suite");
    verify->add_option("--n", n, "family parameter");

    CLI11_PARSE(app, argc, argv);

    try {
        RingPtr ring = build_ring(g);

        if (betti->parsed()) {
            Ideal i = resolve_ideal(ideal_text_opt, family_opt, n, ring);
            BettiTable t = betti_table(i);
            emit(betti_to_json(t, *ring), betti_diagram(t), g.json_output);
            return 0;
        }
        if (hf->parsed()) {
            Ideal i = resolve_ideal(ideal_text_opt, family_opt, n, ring);
            int cap = jmax;
            if (cap < 0) {
                if (!i.is_m_primary())
                    throw input_error("--jmax is required for a non-m-primary ideal");
                cap = i.socle_bound();
            }
            HilbertFunction h = i.hilbert_function(cap);
            emit(hf_to_json(h), hf_text(h), g.json_output);
            return 0;
        }
        if (link->parsed()) {
            Ideal i = resolve_ideal(ideal_text_opt, family_opt, n, ring);
            CompleteIntersection c(ring, parse_generators(ci_text, ring));
            Ideal j = direct_link(c, i);
            json out;
            out["link"] = ideal_to_json(j);
            std::string text = ideal_text(j);
            if (!j.is_unit()) {
                BettiTable t = betti_table(j);
                out["betti"] = betti_to_json(t, *ring);
                out["lambda"] = lambda_count(j);
                out["grade_jumps"] = grade_jump_values(j).degrees;
                text += betti_diagram(t);
            } else {
                out["self_link"] = true;
                text += "(unit ideal: C = I)\n";
            }
            emit(out, text, g.json_output);
            return 0;
        }
        if (colon->parsed()) {
            Ideal i = Ideal::from_text(ideal_text_opt, ring);
            Ideal by = Ideal::from_text(by_text, ring);
            Ideal q = i.colon(by);
            emit(json{{"colon", ideal_to_json(q)}}, ideal_text(q), g.json_output);
            return 0;
        }
        if (chain->parsed()) {
            Ideal start = resolve_ideal(ideal_text_opt, family_opt, n, ring);
            std::vector<ChainStepInput> steps;
            if (paper_steps) {
                if (family_opt != "Jprime")
                    throw input_error("--paper-steps applies to --family Jprime");
                steps = jprime_paper_steps(n, ring);
            } else if (!steps_types.empty()) {
                steps = parse_type_steps(steps_types);
            } else if (!steps_gens.empty()) {
                steps = parse_gens_steps(steps_gens, ring);
            } else {
                throw input_error("chain needs --steps, --steps-gens, or --paper-steps");
            }
            Rng rng(g.seed);
            ChainReport report = verify_chain(start, steps, rng);
            emit(chain_to_json(report, *ring), chain_to_text(report), g.json_output);
            return 0;
        }
        if (inverse->parsed()) {
            Ideal i = resolve_ideal(ideal_text_opt, family_opt, n, ring);
            std::optional<int> cap;
            if (jmax >= 0) cap = jmax;
            InverseSystem m = InverseSystem::of_ideal(i, cap);
            std::string text;
            for (const auto& gen : m.minimal_generators()) text += gen.str() + "\n";
            emit(inverse_to_json(m), text, g.json_output);
            return 0;
        }
        if (family->parsed()) {
            Ideal i = make_family(family_positional, n, ring);
            emit(ideal_to_json(i), ideal_text(i), g.json_output);
            return 0;
        }
        if (verify->parsed()) {
            auto results = verify_paper(n, g.seed);
            bool all = true;
            json arr = json::array();
            for (const auto& r : results) {
                all = all && r.pass;
                if (g.json_output) {
                    arr.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
                } else {
                    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << "\n";
                }
                if (!r.pass) std::cerr << r.name << ": " << r.detail << "\n";
            }
            if (g.json_output) std::cout << arr.dump(2) << "\n";
            return all ? 0 : 1;
        }
    } catch (const genericity_error& e) {
        std::cerr << "genericity failure: " << e.what() << "\n";
        return 3;
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
