// dla: decisions, witnesses, and branching checks for diagonal locally
// simple Lie algebras given by finite exhaustion descriptors.

#include "dla/branching.hpp"
#include "dla/classify.hpp"
#include "dla/constructor.hpp"
#include "dla/io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace dla;
using nlohmann::json;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 3;
constexpr int kExitParse = 4;

int exit_code(Answer a) {
    switch (a) {
        case Answer::Yes: return kExitYes;
        case Answer::No: return kExitNo;
        case Answer::Unknown: return kExitUnknown;
    }
    return kExitUsage;
}

// Inputs may be descriptor files or profile files; descriptors are
// recognized by their 'tail:' line.
AlgebraProfile load_profile_any(const std::string& path, const Rational& precision) {
    std::string text = read_file(path);
    if (text.find("tail") != std::string::npos)
        return profile_of(parse_descriptor(text), precision);
    return parse_profile(text);
}

json verdict_json(const Verdict& v) {
    json j;
    j["result"] = to_string(v.answer);
    j["precision"] = to_string(v.precision_used);
    j["conditions"] = json::array();
    for (const auto& t : v.trace)
        j["conditions"].push_back(
            {{"id", t.id}, {"status", to_string(t.status)}, {"detail", t.detail}});
    return j;
}

void print_verdict(const Verdict& v, bool as_json, bool with_trace, json extra = json()) {
    if (as_json) {
        json j = verdict_json(v);
        for (auto& [k, val] : extra.items()) j[k] = val;
        std::cout << j.dump(2) << "\n";
        return;
    }
    if (with_trace)
        std::cout << v.to_report();
    else
        std::cout << "RESULT: " << to_string(v.answer) << "\n";
}

json levels_json(const EmbeddingDiagram& d) {
    json out = json::array();
    for (const auto& L : d.levels)
        out.push_back({{"i", L.source_level},
                       {"k", L.target_level},
                       {"x", L.x.str()},
                       {"y", L.y.str()},
                       {"u", L.u.str()}});
    return out;
}

void print_levels(const EmbeddingDiagram& d) {
    for (const auto& L : d.levels)
        std::cout << "LEVEL " << L.source_level << " " << L.target_level << " " << L.x << " "
                  << L.y << " " << L.u << "\n";
}

void print_triangle_report(const Triangle& t) {
    for (std::size_t k = 0; k < t.rows.size(); ++k) {
        std::cout << "ROW " << k << ":";
        for (const auto& a : t.rows[k]) std::cout << " " << a;
        std::cout << "\n";
    }
    for (std::size_t k = 1; k <= t.b.size(); ++k)
        std::cout << "B " << k << ": " << to_string(t.b[k - 1]) << "\n";
}

void print_branching(const BranchingResult& b) {
    for (const auto& [w, m] : b.multiplicities)
        std::cout << "WEIGHT " << weight_to_string(w.entries) << " MULT " << m << "\n";
    std::cout << "DIM " << b.total_dimension() << "\n";
}

json branching_json(const BranchingResult& b) {
    json j;
    j["weights"] = json::array();
    for (const auto& [w, m] : b.multiplicities)
        j["weights"].push_back(
            {{"weight", weight_to_string(w.entries)}, {"mult", m.str()}});
    j["dim"] = b.total_dimension().str();
    return j;
}

HighestWeight weight_arg(const std::string& lit) { return HighestWeight{parse_weight(lit)}; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"decision procedures for diagonal locally simple Lie algebras"};
    app.require_subcommand(1);

    std::string precision_lit = "2^-40";
    bool as_json = false;
    app.add_option("--precision", precision_lit, "interval precision (rational literal)")
        ->capture_default_str();
    app.add_flag("--json", as_json, "structured key-value output");

    std::string in_a, in_b, out_path, target_lit, target_file;
    std::size_t depth = 4, witness_depth = 4;
    bool with_trace = true;
    std::uint64_t q_val = 4, k_val = 2, n_val = 2;
    std::string w_lit, mu_lit, nu_lit, lambda_lit, sig_lit;

    auto* cmd_profile = app.add_subcommand("profile", "classify a descriptor");
    cmd_profile->add_option("descriptor", in_a)->required();
    cmd_profile->add_option("--out", out_path);

    auto* cmd_iso = app.add_subcommand("iso", "decide isomorphism");
    cmd_iso->add_option("first", in_a)->required();
    cmd_iso->add_option("second", in_b)->required();
    cmd_iso->add_flag("--trace,!--no-trace", with_trace, "print condition lines");

    auto* cmd_embed = app.add_subcommand("embed", "decide embeddability");
    cmd_embed->add_option("source", in_a)->required();
    cmd_embed->add_option("target", in_b)->required();
    cmd_embed->add_option("--witness-depth", witness_depth)->capture_default_str();
    cmd_embed->add_option("--out", out_path, "write the witness diagram here");
    cmd_embed->add_flag("--trace,!--no-trace", with_trace);

    auto* cmd_equiv = app.add_subcommand("equiv", "decide equivalence");
    cmd_equiv->add_option("first", in_a)->required();
    cmd_equiv->add_option("second", in_b)->required();
    cmd_equiv->add_flag("--trace,!--no-trace", with_trace);

    auto* cmd_universal = app.add_subcommand("universal", "greatest-element test");
    cmd_universal->add_option("input", in_a)->required();

    auto* cmd_diagram = app.add_subcommand("diagram", "build a witness diagram");
    cmd_diagram->add_option("source", in_a)->required();
    cmd_diagram->add_option("target", in_b)->required();
    cmd_diagram->add_option("--depth", depth)->capture_default_str();
    cmd_diagram->add_option("--out", out_path);

    auto* cmd_triangle = app.add_subcommand("triangle", "exterior-power triangle");
    cmd_triangle->add_option("--q", q_val)->capture_default_str();
    cmd_triangle->add_option("--target", target_lit, "Steinitz literal");
    cmd_triangle->add_option("--target-file", target_file, "descriptor file");
    cmd_triangle->add_option("--depth", depth)->capture_default_str();
    cmd_triangle->add_option("--out", out_path);

    auto* cmd_check = app.add_subcommand("check", "verify a diagram/triangle/descriptor/profile");
    cmd_check->add_option("file", in_a)->required();

    auto* cmd_branch = app.add_subcommand("branch", "branching-rule oracle");
    cmd_branch->require_subcommand(1);
    auto* br_gt = cmd_branch->add_subcommand("gt", "Gelfand-Tsetlin restriction");
    br_gt->add_option("--weight", w_lit)->required();
    auto* br_diag = cmd_branch->add_subcommand("diag", "diagonal (k,0,0) restriction");
    br_diag->add_option("--weight", w_lit)->required();
    br_diag->add_option("--k", k_val)->required();
    br_diag->add_option("--n", n_val)->required();
    auto* br_lr = cmd_branch->add_subcommand("lr", "Littlewood-Richardson coefficient");
    br_lr->add_option("--mu", mu_lit)->required();
    br_lr->add_option("--nu", nu_lit)->required();
    br_lr->add_option("--lambda", lambda_lit)->required();
    auto* br_dim = cmd_branch->add_subcommand("dim", "Weyl dimension");
    br_dim->add_option("--weight", w_lit)->required();
    auto* br_index = cmd_branch->add_subcommand("index", "Dynkin index");
    br_index->add_option("--weight", w_lit);
    br_index->add_option("--sig", sig_lit, "signature literal (l,r,z)");

    CLI11_PARSE(app, argc, argv);

    try {
        const Rational precision = parse_rational(precision_lit);

        if (cmd_profile->parsed()) {
            AlgebraProfile p = load_profile_any(in_a, precision);
            std::string text = profile_to_string(p);
            if (!out_path.empty()) write_file(out_path, text);
            if (as_json) {
                json j;
                j["result"] = "VALID";
                j["profile"] = text;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "RESULT: VALID\n" << text;
            }
            return kExitYes;
        }

        if (cmd_iso->parsed() || cmd_equiv->parsed()) {
            AlgebraProfile p1 = load_profile_any(in_a, precision);
            AlgebraProfile p2 = load_profile_any(in_b, precision);
            Verdict v = cmd_iso->parsed() ? isomorphic(p1, p2, precision)
                                          : equivalent(p1, p2, precision);
            print_verdict(v, as_json, with_trace);
            return exit_code(v.answer);
        }

        if (cmd_embed->parsed()) {
            std::string ta = read_file(in_a), tb = read_file(in_b);
            bool both_descriptors =
                ta.find("tail") != std::string::npos && tb.find("tail") != std::string::npos;
            AlgebraProfile p1 = load_profile_any(in_a, precision);
            AlgebraProfile p2 = load_profile_any(in_b, precision);
            Verdict v = embeds(p1, p2, precision);

            json extra;
            std::optional<EmbeddingDiagram> witness;
            std::string witness_note;
            if (v.yes() && witness_depth > 0 && both_descriptors) {
                try {
                    witness = build_diagram(parse_descriptor(ta), parse_descriptor(tb),
                                            witness_depth);
                    VerifyReport rep = verify_diagram(*witness);
                    if (!rep.ok) {
                        std::cerr << "internal error: built witness failed verification\n";
                        return kExitUsage;
                    }
                } catch (const UnsupportedConstruction& e) {
                    witness_note = e.what();
                }
            }
            if (as_json) {
                if (witness) extra["levels"] = levels_json(*witness);
                if (!witness_note.empty()) extra["witness_unsupported"] = witness_note;
                print_verdict(v, true, with_trace, extra);
            } else {
                print_verdict(v, false, with_trace);
                if (witness) print_levels(*witness);
                if (!witness_note.empty())
                    std::cout << "WITNESS unsupported: " << witness_note << "\n";
            }
            if (witness && !out_path.empty()) write_file(out_path, diagram_to_string(*witness));
            return exit_code(v.answer);
        }

        if (cmd_universal->parsed()) {
            AlgebraProfile p = load_profile_any(in_a, precision);
            bool u = is_universal(p);
            if (as_json)
                std::cout << json{{"result", u ? "YES" : "NO"}}.dump(2) << "\n";
            else
                std::cout << "RESULT: " << (u ? "YES" : "NO") << "\n";
            return u ? kExitYes : kExitNo;
        }

        if (cmd_diagram->parsed()) {
            ExhaustionDescriptor d1 = load_descriptor_file(in_a);
            ExhaustionDescriptor d2 = load_descriptor_file(in_b);
            EmbeddingDiagram diag = build_diagram(d1, d2, depth);
            VerifyReport rep = verify_diagram(diag);
            if (!rep.ok) {
                std::cerr << "internal error: built diagram failed verification\n";
                return kExitUsage;
            }
            if (!out_path.empty()) write_file(out_path, diagram_to_string(diag));
            if (as_json) {
                std::cout << json{{"result", "VALID"}, {"levels", levels_json(diag)}}.dump(2)
                          << "\n";
            } else {
                std::cout << "RESULT: VALID\n";
                print_levels(diag);
            }
            return kExitYes;
        }

        if (cmd_triangle->parsed()) {
            if (target_lit.empty() == target_file.empty()) {
                std::cerr << "triangle: exactly one of --target/--target-file is required\n";
                return kExitUsage;
            }
            Triangle t = target_file.empty()
                             ? build_triangle(BigInt(q_val), parse_steinitz(target_lit), depth)
                             : build_triangle(BigInt(q_val), load_descriptor_file(target_file),
                                              depth);
            if (!out_path.empty()) write_file(out_path, triangle_to_string(t));
            if (as_json) {
                json j;
                j["result"] = "VALID";
                j["rows"] = json::array();
                for (const auto& row : t.rows) {
                    json r = json::array();
                    for (const auto& a : row) r.push_back(a.str());
                    j["rows"].push_back(r);
                }
                j["b"] = json::array();
                for (const auto& b : t.b) j["b"].push_back(to_string(b));
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "RESULT: VALID\n";
                print_triangle_report(t);
            }
            return kExitYes;
        }

        if (cmd_check->parsed()) {
            std::string text = read_file(in_a);
            VerifyReport rep;
            std::string kind;
            auto first_word = [&]() -> std::string {
                std::istringstream is(text);
                std::string w;
                is >> w;
                return w;
            };
            std::string head = first_word();
            if (head == "diagram") {
                kind = "diagram";
                rep = verify_diagram(parse_diagram(text));
            } else if (head == "triangle") {
                kind = "triangle";
                rep = verify_triangle(parse_triangle(text));
            } else if (text.find("tail") != std::string::npos) {
                kind = "descriptor";
                parse_descriptor(text);
            } else {
                kind = "profile";
                parse_profile(text);
            }
            if (as_json) {
                json j{{"result", rep.ok ? "VALID" : "INVALID"}, {"kind", kind}};
                j["failures"] = rep.failures;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "RESULT: " << (rep.ok ? "VALID" : "INVALID") << "\n";
                for (const auto& f : rep.failures) std::cout << "FAIL " << f << "\n";
            }
            return rep.ok ? kExitYes : kExitNo;
        }

        if (cmd_branch->parsed()) {
            if (br_gt->parsed()) {
                BranchingResult b = gt_branch(weight_arg(w_lit));
                if (as_json) std::cout << branching_json(b).dump(2) << "\n";
                else {
                    std::cout << "RESULT: VALID\n";
                    print_branching(b);
                }
                return kExitYes;
            }
            if (br_diag->parsed()) {
                BranchingResult b = restrict_diagonal(weight_arg(w_lit), k_val, n_val);
                if (as_json) std::cout << branching_json(b).dump(2) << "\n";
                else {
                    std::cout << "RESULT: VALID\n";
                    print_branching(b);
                }
                return kExitYes;
            }
            if (br_lr->parsed()) {
                BigInt c = lr_coefficient(weight_arg(mu_lit), weight_arg(nu_lit),
                                          weight_arg(lambda_lit));
                if (as_json) std::cout << json{{"coefficient", c.str()}}.dump(2) << "\n";
                else std::cout << "RESULT: VALID\nCOEFF " << c << "\n";
                return kExitYes;
            }
            if (br_dim->parsed()) {
                BigInt d = weyl_dim(weight_arg(w_lit));
                if (as_json) std::cout << json{{"dim", d.str()}}.dump(2) << "\n";
                else std::cout << "RESULT: VALID\nDIM " << d << "\n";
                return kExitYes;
            }
            if (br_index->parsed()) {
                if (!w_lit.empty()) {
                    Rational idx = dynkin_index_module(weight_arg(w_lit));
                    if (as_json) std::cout << json{{"index", to_string(idx)}}.dump(2) << "\n";
                    else std::cout << "RESULT: VALID\nINDEX " << to_string(idx) << "\n";
                } else if (!sig_lit.empty()) {
                    auto w = parse_weight("[" + sig_lit.substr(1, sig_lit.size() - 2) + "]");
                    if (w.size() != 3) throw std::invalid_argument("signature needs (l,r,z)");
                    BigInt idx = index_of_signature({w[0], w[1], w[2]});
                    if (as_json) std::cout << json{{"index", idx.str()}}.dump(2) << "\n";
                    else std::cout << "RESULT: VALID\nINDEX " << idx << "\n";
                } else {
                    std::cerr << "branch index: need --weight or --sig\n";
                    return kExitUsage;
                }
                return kExitYes;
            }
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const NotEmbeddable& e) {
        std::cerr << "not embeddable: " << e.what() << "\n";
        return kExitNo;
    } catch (const UnsupportedConstruction& e) {
        std::cerr << "unsupported construction: " << e.what() << "\n";
        return kExitNo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
