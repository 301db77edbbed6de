#include "krc/branching.hpp"
#include "krc/fermionic.hpp"
#include "krc/iso_check.hpp"
#include "krc/kr_crystal.hpp"
#include "krc/norms.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace krc;

namespace {

constexpr int kPass = 0, kFail = 1, kUsage = 2;

struct Target {
    std::string type;
    int r = 1;
    int s = 1;
};

void add_target(CLI::App* cmd, Target& t) {
    cmd->add_option("--type", t.type, "affine type, e.g. D4~1, B3~1, A5~2")->required();
    cmd->add_option("--r", t.r, "node r")->required();
    cmd->add_option("--s", t.s, "level s")->required();
}

KRCrystal build_crystal(const Target& tg, int max_vertices) {
    return KRCrystal::build(AffineType::parse(tg.type), tg.r, tg.s, max_vertices);
}

std::string labels_str(const std::vector<int>& colors, const std::vector<int>& labels) {
    std::string out;
    for (size_t k = 0; k < colors.size(); ++k) {
        if (labels[k] == 0) continue;
        if (!out.empty()) out += " + ";
        if (labels[k] != 1) out += std::to_string(labels[k]) + "*";
        out += "w" + std::to_string(colors[k]);
    }
    return out.empty() ? "0" : out;
}

bool report(const std::string& name, const CheckReport& rep) {
    std::cout << (rep.pass ? "PASS " : "FAIL ") << name << " (" << rep.checked << " checks)\n";
    for (const auto& f : rep.failures) std::cout << "  witness: " << f << "\n";
    return rep.pass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kirillov-Reshetikhin crystals of types D_n^(1), B_n^(1), A_{2n-1}^(2)"};
    app.require_subcommand(1);
    int max_vertices = 200000;
    app.add_option("--max-vertices", max_vertices, "vertex cap for crystal construction");

    Target tb, td, tf, tv;
    std::string out_file, colors_text, suite = "all", in_file, format = "dot";

    auto* build = app.add_subcommand("build", "generate a crystal graph as JSON");
    add_target(build, tb);
    build->add_option("--out", out_file, "output file (default stdout)");

    auto* decompose = app.add_subcommand("decompose", "decomposition restricted to a set of colours");
    add_target(decompose, td);
    decompose->add_option("--colors", colors_text, "comma separated colours (default 1..n)");

    auto* fermionic = app.add_subcommand("fermionic", "print the (lambda, N, M) table");
    add_target(fermionic, tf);

    auto* verify = app.add_subcommand("verify", "run verification suites");
    add_target(verify, tv);
    verify->add_option("--suite", suite, "axioms|sigma|lemma52|prop61|norms|all")
        ->check(CLI::IsMember({"axioms", "sigma", "lemma52", "prop61", "norms", "all"}));

    auto* exp = app.add_subcommand("export", "convert a persisted graph");
    exp->add_option("--in", in_file, "JSON file written by build")->required();
    exp->add_option("--format", format, "output format")->check(CLI::IsMember({"dot"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*build) {
            const std::string json = build_crystal(tb, max_vertices).to_json();
            if (out_file.empty()) {
                std::cout << json;
            } else {
                std::ofstream os(out_file, std::ios::binary);
                if (!os) throw std::invalid_argument("cannot write " + out_file);
                os << json;
            }
            return kPass;
        }
        if (*decompose) {
            const AffineType t = AffineType::parse(td.type);
            std::vector<int> colors;
            if (colors_text.empty()) {
                for (int i = 1; i <= t.n; ++i) colors.push_back(i);
            } else {
                std::stringstream ss(colors_text);
                for (std::string item; std::getline(ss, item, ',');) colors.push_back(std::stoi(item));
            }
            for (int c : colors)
                if (c < 0 || c > t.n) throw std::invalid_argument("colour out of range");
            bool classical = !colors.empty() && colors.front() != 0;
            for (size_t k = 0; k < colors.size(); ++k) classical = classical && colors[k] == static_cast<int>(k) + 1;
            if (!t.has_crystal_model()) {
                if (!classical || static_cast<int>(colors.size()) != t.n)
                    throw std::invalid_argument("only the classical decomposition is available for " + t.name());
                for (const Weight& w : decompose_diagrammatic(t, td.r, td.s)) std::cout << w.str() << "\n";
                return kPass;
            }
            const KRCrystal k = build_crystal(td, max_vertices);
            for (const auto& labels : k.decompose(colors)) std::cout << labels_str(colors, labels) << "\n";
            return kPass;
        }
        if (*fermionic) {
            const AffineType t = AffineType::parse(tf.type);
            std::cout << "lambda\tN\tM\n";
            for (const auto& row : fermionic_table(t, tf.r, tf.s))
                std::cout << row.lambda.str() << "\t" << row.N << "\t" << row.M << "\n";
            return kPass;
        }
        if (*verify) {
            const AffineType t = AffineType::parse(tv.type);
            bool ok = true;
            const bool all = suite == "all";
            if (all || suite == "norms") {
                NormReport rep = check_criterion(t, tv.r, tv.s);
                for (auto& e : recursion_check(t, tv.r, tv.s).entries) rep.entries.push_back(std::move(e));
                const int bad = rep.violations();
                std::cout << (bad ? "FAIL " : "PASS ") << "norms (" << rep.entries.size() << " checks)\n";
                for (const auto& e : rep.entries)
                    if (!e.pass) std::cout << "  witness: j=" << e.j << " " << e.check << " " << e.detail << "\n";
                ok = ok && bad == 0;
            }
            if (suite != "norms") {
                const KRCrystal k = build_crystal(tv, max_vertices);
                if (all || suite == "axioms") ok = report("axioms", check_axioms(t, k.graph())) && ok;
                if (all || suite == "sigma") ok = report("sigma", check_sigma(k)) && ok;
                if (all || suite == "lemma52") ok = report("lemma52", check_containment(k)) && ok;
                if (all || suite == "prop61") {
                    const RigidityReport rep = verify_prop61(t, k.graph());
                    std::cout << (rep.pass() ? "PASS " : "FAIL ") << "prop61 (automorphisms: " << rep.automorphisms
                              << ")\n";
                    if (!rep.pass()) std::cout << "  witness: " << rep.witness << "\n";
                    ok = ok && rep.pass();
                }
            }
            return ok ? kPass : kFail;
        }
        if (*exp) {
            std::ifstream is(in_file, std::ios::binary);
            if (!is) throw std::invalid_argument("cannot read " + in_file);
            std::stringstream buf;
            buf << is.rdbuf();
            std::cout << graph_to_dot(buf.str());
            return kPass;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ResourceLimit& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    }
    return kUsage;
}
