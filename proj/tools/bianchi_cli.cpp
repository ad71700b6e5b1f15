#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "bianchi/report.hpp"

using namespace bianchi;

namespace {

Budget make_budget(std::size_t max_roots, const std::string& max_weight) {
    Budget b;
    b.max_roots = max_roots;
    b.max_weight_sq = Rational(max_weight);
    b.max_weight_sq.canonicalize();
    return b;
}

bool write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) {
        std::cerr << "error: cannot write " << path << "\n";
        return false;
    }
    out << text;
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Vinberg's algorithm for Bianchi groups"};
    app.require_subcommand(1);

    const Budget defaults;
    std::size_t max_roots = defaults.max_roots;
    std::string max_weight = defaults.max_weight_sq.get_str();

    auto* cls = app.add_subcommand("classify", "classify one field Q(sqrt(-m))");
    std::int64_t m = 0;
    std::string json_path, dot_path;
    cls->add_option("--m", m, "square-free m >= 1")->required();
    cls->add_option("--max-roots", max_roots, "root budget")->capture_default_str();
    cls->add_option("--max-weight-sq", max_weight, "weight_sq budget (integer or p/q)")->capture_default_str();
    cls->add_option("--json", json_path, "write the JSON report here");
    cls->add_option("--dot", dot_path, "write the Coxeter diagram (DOT) here");

    auto* sc = app.add_subcommand("scan", "classify a range or list of m");
    std::int64_t from = 0, to = 0;
    std::string list_path, out_dir;
    unsigned jobs = 1;
    auto* from_opt = sc->add_option("--from", from);
    auto* to_opt = sc->add_option("--to", to);
    auto* list_opt = sc->add_option("--list", list_path, "file with one m per line")->check(CLI::ExistingFile);
    from_opt->needs(to_opt);
    to_opt->needs(from_opt);
    list_opt->excludes(from_opt)->excludes(to_opt);
    sc->add_option("--jobs", jobs, "parallel workers (0 = all cores)")->capture_default_str();
    sc->add_option("--out", out_dir, "directory for per-m JSON reports");
    sc->add_option("--max-roots", max_roots, "root budget")->capture_default_str();
    sc->add_option("--max-weight-sq", max_weight, "weight_sq budget")->capture_default_str();

    auto* tb = app.add_subcommand("tables", "reproduce a reference table");
    std::string which;
    tb->add_option("--which", which, "table id")->required()->check(CLI::IsMember(table_ids()));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (cls->parsed()) {
            if (m < 1 || !is_squarefree(m)) {
                std::cerr << "error: m must be a positive square-free integer\n";
                return 1;
            }
            const Verdict v = classify(m, make_budget(max_roots, max_weight));
            std::cout << summary_line(v) << "\n";
            for (std::size_t i = 0; i < v.roots.roots.size(); ++i) {
                const Root& r = v.roots.roots[i];
                std::cout << "  " << (i + 1) << "  " << r.vec << "  k=" << r.norm_k
                          << "  w=" << weight(v.form, r) << (v.diagram.vertex(i).filled ? "  filled" : "") << "\n";
            }
            if (!v.hat.note.empty()) std::cout << "hat: " << v.hat.note << "\n";
            if (!v.bi.note.empty()) std::cout << "bi: " << v.bi.note << "\n";
            if (!json_path.empty() && !write_file(json_path, report_json(v) + "\n")) return 1;
            if (!dot_path.empty() && !write_file(dot_path, export_dot(v.diagram))) return 1;
            return 0;
        }
        if (sc->parsed()) {
            std::vector<std::int64_t> ms;
            if (!list_path.empty()) {
                std::ifstream in(list_path);
                for (std::int64_t x; in >> x;) ms.push_back(x);
            } else if (from_opt->count()) {
                for (std::int64_t x = from; x <= to; ++x) ms.push_back(x);
            } else {
                std::cerr << "error: scan needs --from/--to or --list\n";
                return 1;
            }
            if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
            const ScanResult res = scan(ms, make_budget(max_roots, max_weight), jobs);
            for (const auto& v : res.verdicts) {
                std::cout << summary_line(v) << "\n";
                if (!out_dir.empty()) {
                    const auto path = std::filesystem::path(out_dir) / ("m" + std::to_string(v.m) + ".json");
                    if (!write_file(path.string(), report_json(v) + "\n")) return 1;
                }
            }
            return 0;
        }
        if (tb->parsed()) {
            const TableReport rep = reproduce_table(which);
            std::cout << rep.text;
            return rep.pass ? 0 : 2;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
