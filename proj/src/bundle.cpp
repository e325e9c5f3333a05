#include <kacmod/bundle.hpp>

#include <json.hpp>

#include <cstdio>

namespace kacmod {

namespace {

std::string fmt(double v) {
    if (v == 0.0) v = 0.0; // canonicalize the sign of zero
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '"':  out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

void append_doubles(std::string& out, const std::vector<double>& vals) {
    out += '[';
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (i) out += ',';
        out += fmt(vals[i]);
    }
    out += ']';
}

} // namespace

ExportBundle make_bundle(const QContext& ctx, const HighestWeight& hw,
                         const std::array<double, 3>& a, bool factor) {
    ExportBundle b;
    b.hw = hw;
    b.q = ctx.q;
    b.a = a;
    b.tol = ctx.tol;
    b.factor = factor;
    b.cls = classify(hw);
    const ModuleRep rep = factor ? factor_module(ctx, hw, a) : build_module(ctx, hw, a);
    b.basis = rep.basis;
    b.parity = rep.parity;
    for (Gen g : all_generators)
        b.matrices.emplace_back(generator_name(g), rep.at(g).data());
    return b;
}

std::string serialize(const ExportBundle& bundle) {
    std::string out;
    out.reserve(4096);
    out += "{\n";
    out += "\"format\": \"" + escape(bundle.format) + "\",\n";
    out += "\"version\": \"" + escape(bundle.version) + "\",\n";
    out += "\"hw\": ";
    append_doubles(out, {bundle.hw.m13, bundle.hw.m23, bundle.hw.m33});
    out += ",\n\"q\": " + fmt(bundle.q);
    out += ",\n\"a\": ";
    append_doubles(out, {bundle.a[0], bundle.a[1], bundle.a[2]});
    out += ",\n\"tol\": " + fmt(bundle.tol);
    out += ",\n\"module\": \"";
    out += bundle.factor ? "factor" : "full";
    out += "\"";
    out += ",\n\"classification\": {\"kind\": \"";
    out += kind_name(bundle.cls.kind);
    out += "\", \"c1\": " + fmt(bundle.cls.c1) + ", \"c2\": " + fmt(bundle.cls.c2) + "}";
    out += ",\n\"dim\": " + std::to_string(bundle.parity.size());
    out += ",\n\"basis\": [";
    for (std::size_t i = 0; i < bundle.basis.size(); ++i) {
        if (i) out += ',';
        out += "\n{\"k\": " + std::to_string(bundle.basis[i].k) +
               ", \"m11\": " + fmt(bundle.basis[i].m11) + "}";
    }
    out += "\n]";
    out += ",\n\"parity\": [";
    for (std::size_t i = 0; i < bundle.parity.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(bundle.parity[i]);
    }
    out += "]";
    out += ",\n\"matrices\": {";
    for (std::size_t i = 0; i < bundle.matrices.size(); ++i) {
        if (i) out += ',';
        out += "\n\"" + escape(bundle.matrices[i].first) + "\": ";
        append_doubles(out, bundle.matrices[i].second);
    }
    out += "\n}\n}\n";
    return out;
}

ExportBundle parse_bundle(const std::string& text) try {
    const nlohmann::json j = nlohmann::json::parse(text);
    ExportBundle b;
    b.format = j.at("format").get<std::string>();
    if (b.format != kBundleFormat)
        throw std::runtime_error("parse_bundle: unsupported format tag " + b.format);
    b.version = j.at("version").get<std::string>();
    const auto hw = j.at("hw");
    b.hw = HighestWeight{hw.at(0).get<double>(), hw.at(1).get<double>(),
                         hw.at(2).get<double>()};
    b.q = j.at("q").get<double>();
    const auto a = j.at("a");
    b.a = {a.at(0).get<double>(), a.at(1).get<double>(), a.at(2).get<double>()};
    b.tol = j.at("tol").get<double>();
    b.factor = j.at("module").get<std::string>() == "factor";
    const auto cls = j.at("classification");
    const std::string kind = cls.at("kind").get<std::string>();
    b.cls.kind = kind == "typical"  ? Classification::Kind::typical
                 : kind == "class1" ? Classification::Kind::class1
                                    : Classification::Kind::class2;
    b.cls.c1 = cls.at("c1").get<double>();
    b.cls.c2 = cls.at("c2").get<double>();
    for (const auto& v : j.at("basis"))
        b.basis.push_back(
            make_gzvector(b.hw, v.at("k").get<int>(), v.at("m11").get<double>()));
    for (const auto& p : j.at("parity")) b.parity.push_back(p.get<int>());
    const auto& mats = j.at("matrices");
    for (Gen g : all_generators) {
        const auto it = mats.find(generator_name(g));
        if (it == mats.end())
            throw std::runtime_error(std::string("parse_bundle: missing matrix ") +
                                     generator_name(g));
        b.matrices.emplace_back(generator_name(g), it->get<std::vector<double>>());
    }
    const std::size_t n = b.parity.size();
    for (const auto& [name, entries] : b.matrices)
        if (entries.size() != n * n)
            throw std::runtime_error("parse_bundle: matrix " + name +
                                     " has wrong entry count");
    return b;
} catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("parse_bundle: malformed input: ") + e.what());
}

std::string serialize_reports(const std::vector<RelationReport>& reports,
                              double tol) {
    std::size_t failures = 0;
    for (const auto& r : reports)
        if (!r.passed) ++failures;
    std::string out;
    out += "{\n";
    out += "\"format\": \"";
    out += kBundleFormat;
    out += "\",\n\"kind\": \"verify\",\n";
    out += "\"tol\": " + fmt(tol) + ",\n";
    out += "\"reports\": [";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const RelationReport& r = reports[i];
        if (i) out += ',';
        out += "\n{\"relation\": \"" + escape(r.relation_id) + "\", \"context\": \"" +
               escape(r.context) + "\", \"max_residual\": " + fmt(r.max_residual) +
               ", \"scale\": " + fmt(r.scale) + ", \"passed\": " +
               (r.passed ? "true" : "false") + "}";
    }
    out += "\n],\n";
    out += "\"failures\": " + std::to_string(failures) + "\n}\n";
    return out;
}

} // namespace kacmod
