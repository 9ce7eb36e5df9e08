#include "synge/io.hpp"

#include <cmath>
#include <cstdlib>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>

#include "synge/error.hpp"

namespace synge::io {

namespace {

void newline(std::string& out, int indent, int level) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * level), ' ');
}

void write(const Json& j, std::string& out, int indent, int level) {
    switch (j.type()) {
        case Json::value_t::null: out += "null"; break;
        case Json::value_t::boolean: out += j.get<bool>() ? "true" : "false"; break;
        case Json::value_t::number_integer: out += std::to_string(j.get<std::int64_t>()); break;
        case Json::value_t::number_unsigned: out += std::to_string(j.get<std::uint64_t>()); break;
        case Json::value_t::number_float: {
            const double x = j.get<double>();
            out += std::isfinite(x) ? format17(x) : "null";
            break;
        }
        case Json::value_t::string: out += j.dump(); break;
        case Json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                break;
            }
            out += '[';
            bool first = true;
            for (const auto& e : j) {
                if (!first) out += ',';
                first = false;
                newline(out, indent, level + 1);
                write(e, out, indent, level + 1);
            }
            newline(out, indent, level);
            out += ']';
            break;
        }
        case Json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                break;
            }
            out += '{';
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ',';
                first = false;
                newline(out, indent, level + 1);
                out += Json(it.key()).dump();
                out += indent < 0 ? ":" : ": ";
                write(it.value(), out, indent, level + 1);
            }
            newline(out, indent, level);
            out += '}';
            break;
        }
        default: out += "null"; break;
    }
}

double number_field(const Json& j, const char* key, const char* where) {
    if (!j.is_object() || !j.contains(key)) {
        throw InputError(std::string(where) + ": missing field \"" + key + "\"");
    }
    const Json& v = j.at(key);
    if (!v.is_number()) throw InputError(std::string(where) + "." + key + " must be a number");
    return v.get<double>();
}

Json optional_state(const std::optional<FluidState>& s) {
    return s ? state_json(*s) : Json(nullptr);
}

}  // namespace

std::string dump(const Json& j, int indent) {
    std::string out;
    write(j, out, indent, 0);
    return out;
}

Json parse(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

Json read(std::istream& in) {
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse(text);
}

std::string csv_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    return format17(x);
}

Json state_json(const FluidState& s) {
    Json j;
    j["rho"] = s.rho;
    j["v"] = s.v;
    j["p"] = s.p;
    j["gamma"] = s.gamma;
    j["shat"] = s.shat;
    j["e"] = s.e;
    return j;
}

Json solution_json(const RiemannSolution& sol) {
    Json j;
    j["gas"] = to_string(sol.input.gas.kind);
    j["left"] = state_json(sol.input.left);
    j["right"] = state_json(sol.input.right);
    j["vacuum"] = sol.vacuum;
    j["boundary"] = sol.boundary;
    j["p_m"] = sol.p_m ? Json(*sol.p_m) : Json(nullptr);
    j["v_m"] = sol.v_m ? Json(*sol.v_m) : Json(nullptr);
    Json waves = Json::array();
    for (const Wave& w : sol.waves) {
        Json wj;
        wj["family"] = w.family;
        wj["kind"] = to_string(w.kind);
        if (w.kind == WaveKind::Rarefaction) {
            wj["head"] = w.head;
            wj["tail"] = w.tail;
        } else {
            wj["speed"] = w.speed;
        }
        waves.push_back(wj);
    }
    j["waves"] = waves;
    j["u_ml"] = optional_state(sol.u_ml);
    j["u_mr"] = optional_state(sol.u_mr);
    j["rbar_l"] = sol.inv_left.rbar;
    j["sbar_r"] = sol.inv_right.sbar;
    j["residual"] = sol.residual;
    return j;
}

Json report_json(const CheckReport& report) {
    Json j;
    Json grid;
    grid["gamma_min"] = report.grid.gamma_min;
    grid["gamma_max"] = report.grid.gamma_max;
    grid["points"] = report.grid.points;
    grid["spacing"] = report.grid.spacing == Spacing::Log ? "log" : "linear";
    grid["refine"] = report.grid.refine;
    grid["total_points"] = report.grid_points;
    j["grid"] = grid;
    Json checks = Json::array();
    for (const CheckResult& r : report.results) {
        Json c;
        c["id"] = r.id;
        c["gas"] = to_string(r.applies);
        c["domain"] = r.domain;
        c["statement"] = r.statement;
        c["points"] = r.points;
        c["violations"] = r.violations;
        c["passed"] = r.passed();
        c["worst_gamma"] = r.worst_gamma;
        c["worst_margin"] = r.worst_margin;
        checks.push_back(c);
    }
    j["checks"] = checks;
    j["total"] = report.results.size();
    j["failed"] = report.failed();
    j["passed"] = report.all_passed();
    return j;
}

Primitive parse_primitive(const Json& j, const char* where) {
    if (!j.is_object()) throw InputError(std::string(where) + " must be an object");
    return {number_field(j, "rho", where), number_field(j, "v", where), number_field(j, "p", where)};
}

RiemannInput parse_problem(const Json& j, const GammaWindow& window) {
    if (!j.is_object()) throw InputError("problem document must be a JSON object");
    if (!j.contains("gas") || !j.at("gas").is_string()) {
        throw InputError("problem: missing string field \"gas\"");
    }
    GasKind kind;
    try {
        kind = parse_gas_kind(j.at("gas").get<std::string>());
    } catch (const DomainError& e) {
        throw InputError(e.what());
    }
    if (!j.contains("left") || !j.contains("right")) {
        throw InputError("problem: fields \"left\" and \"right\" are required");
    }
    const Primitive left = parse_primitive(j.at("left"), "left");
    const Primitive right = parse_primitive(j.at("right"), "right");
    return make_input(Gas(kind, Units{}, window), left, right);
}

GammaWindow parse_window(const std::string& text) {
    std::istringstream s(text);
    double lo = 0, hi = 0;
    char comma = 0;
    if (!(s >> lo >> comma >> hi) || comma != ',' || !(s >> std::ws).eof()) {
        throw InputError("gamma window must be \"lo,hi\", got \"" + text + "\"");
    }
    if (!(lo > 0) || !(hi > lo) || !std::isfinite(hi)) {
        throw InputError("gamma window needs 0 < lo < hi, got \"" + text + "\"");
    }
    GammaWindow w;
    w.lo = lo;
    w.hi = hi;
    return w;
}

GammaWindow window_from_env() {
    const char* env = std::getenv("SYNGE_GAMMA_WINDOW");
    if (env == nullptr || *env == '\0') return GammaWindow{};
    return parse_window(env);
}

void write_curve_csv(std::ostream& out, const CurveTable& table) {
    out << "p,v,shat,gamma,kind,speed_lo,speed_hi\n";
    for (const CurveRow& r : table) {
        out << csv_number(r.p) << ',' << csv_number(r.v) << ',' << csv_number(r.shat) << ','
            << csv_number(r.gamma) << ',' << to_string(r.kind) << ',' << csv_number(r.speed_lo)
            << ',' << csv_number(r.speed_hi) << '\n';
    }
}

}  // namespace synge::io
