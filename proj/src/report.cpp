#include "bianchi/report.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace bianchi {

namespace {

using nlohmann::json;

std::string str(const Integer& x) { return x.get_str(); }
std::string str(std::int64_t x) { return std::to_string(x); }

json vec_json(const LatticeVector& v) {
    json a = json::array();
    for (int i = 0; i < 4; ++i) a.push_back(str(v[i]));
    return a;
}

json matrix_json(const Matrix4& g) {
    json rows = json::array();
    for (const auto& row : g) {
        json r = json::array();
        for (const auto& x : row) r.push_back(str(x));
        rows.push_back(r);
    }
    return rows;
}

json rational_json(const Rational& q) { return {{"num", str(q.get_num())}, {"den", str(q.get_den())}}; }

json status_json(const GroupStatus& s) {
    json j{{"status", to_string(s.status)}};
    if (s.status == Status::QuasiReflective) j["rank"] = str(s.rank);
    if (s.warning) j["warning"] = true;
    if (!s.note.empty()) j["note"] = s.note;
    return j;
}

json certificate_json(const Certificate& c) {
    struct V {
        json operator()(const NoCertificate&) const { return {{"type", "None"}}; }
        json operator()(const LoxodromicSymmetry& l) const {
            return {{"type", "LoxodromicSymmetry"}, {"g", matrix_json(l.g.mat)},
                    {"weight_bound", rational_json(l.weight_bound)}};
        }
        json operator()(const CuspBoundViolation& b) const {
            return {{"type", "CuspBoundViolation"}, {"count", str(b.count)}, {"bound", str(b.bound)}};
        }
        json operator()(const ParabolicRank2& p) const {
            return {{"type", "ParabolicRank2"}, {"g1", matrix_json(p.g1.mat)}, {"g2", matrix_json(p.g2.mat)},
                    {"q", vec_json(p.q)}};
        }
        json operator()(const ParabolicRank1& p) const {
            return {{"type", "ParabolicRank1"}, {"g1", matrix_json(p.g1.mat)}, {"q", vec_json(p.q)}};
        }
    };
    return std::visit(V{}, c);
}

}  // namespace

std::string report_json(const Verdict& v, int indent) {
    json j;
    j["schema"] = kReportSchema;
    j["m"] = str(v.m);
    j["branch"] = v.form.branch == Branch::A ? "A" : "B";
    json roots = json::array();
    for (std::size_t i = 0; i < v.roots.roots.size(); ++i) {
        const Root& r = v.roots.roots[i];
        roots.push_back({{"coords", vec_json(r.vec)},
                         {"norm", str(r.norm_k)},
                         {"weight_sq", rational_json(weight(v.form, r))},
                         {"in_bi", reflection_in_bi(v.m, r)}});
    }
    j["roots"] = roots;
    json edges = json::array();
    for (std::size_t a = 0; a < v.diagram.size(); ++a) {
        for (std::size_t b = a + 1; b < v.diagram.size(); ++b) {
            const EdgeKind& e = v.diagram.edge(a, b);
            if (e.type == EdgeType::RightAngle) continue;
            json ej{{"i", str(static_cast<std::int64_t>(a + 1))}, {"j", str(static_cast<std::int64_t>(b + 1))}};
            switch (e.type) {
                case EdgeType::Angle:
                    ej["kind"] = "angle";
                    ej["label"] = str(e.n);
                    break;
                case EdgeType::Cusp: ej["kind"] = "cusp"; break;
                case EdgeType::Divergent:
                    ej["kind"] = "divergent";
                    ej["label"] = e.distance_sq.get_str();
                    break;
                case EdgeType::RightAngle: break;
            }
            edges.push_back(ej);
        }
    }
    j["diagram"] = {{"edges", edges}};
    j["cusps"] = str(static_cast<std::int64_t>(v.cusps));
    j["run_status"] = to_string(v.roots.status);
    j["hat_status"] = status_json(v.hat);
    j["bi_status"] = status_json(v.bi);
    if (v.certificate) j["certificate"] = certificate_json(*v.certificate);
    json factors = json::array();
    for (std::int64_t f : v.class_group.invariant_factors) factors.push_back(str(f));
    j["class_group"] = {{"D", str(v.class_group.D)},
                        {"h", str(v.class_group.h)},
                        {"factors", factors},
                        {"h2", str(v.h2)}};
    return j.dump(indent);
}

std::string summary_line(const Verdict& v) {
    auto status = [](const GroupStatus& s) {
        std::string out = to_string(s.status);
        if (s.status == Status::QuasiReflective) out += "(" + std::to_string(s.rank) + ")";
        if (s.warning) out += "*";
        return out;
    };
    std::ostringstream os;
    os << std::left << "m=" << std::setw(5) << v.m << " branch " << (v.form.branch == Branch::A ? 'A' : 'B')
       << "  hat " << std::setw(19) << status(v.hat) << " bi " << std::setw(19) << status(v.bi) << " roots "
       << std::setw(4) << v.roots.roots.size() << " cusps " << std::setw(3) << v.cusps << " h " << v.class_group.h
       << " h2 " << v.h2;
    if (v.certificate) os << "  " << certificate_name(*v.certificate);
    os << "  " << std::fixed << std::setprecision(2) << v.seconds << "s";
    return os.str();
}

}  // namespace bianchi
