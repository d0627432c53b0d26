#include "kodual/io.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace kodual::io {

namespace {

Json from_yaml(const YAML::Node& n) {
    switch (n.Type()) {
        case YAML::NodeType::Map: {
            Json out = Json::object();
            for (const auto& kv : n) out[kv.first.as<std::string>()] = from_yaml(kv.second);
            return out;
        }
        case YAML::NodeType::Sequence: {
            Json out = Json::array();
            for (const auto& item : n) out.push_back(from_yaml(item));
            return out;
        }
        case YAML::NodeType::Scalar:
            return n.as<std::string>();
        default:
            return nullptr;
    }
}

const Json& field(const Json& doc, const std::string& name) {
    if (!doc.is_object()) throw ParseError("expected a mapping where field '" + name + "' should be");
    auto it = doc.find(name);
    if (it == doc.end()) throw ParseError("missing field '" + name + "'");
    return *it;
}

std::string as_name(const Json& v, const std::string& where) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw ParseError("field '" + where + "': expected a name");
}

std::vector<std::string> name_list(const Json& doc, const std::string& name) {
    const Json& v = field(doc, name);
    if (!v.is_array()) throw ParseError("field '" + name + "': expected a list");
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(as_name(x, name));
    return out;
}

NamePairs pair_list(const Json& doc, const std::string& name) {
    const Json& v = field(doc, name);
    if (!v.is_array()) throw ParseError("field '" + name + "': expected a list of pairs");
    NamePairs out;
    for (const auto& x : v) {
        if (!x.is_array() || x.size() != 2) throw ParseError("field '" + name + "': expected a list of pairs");
        out.emplace_back(as_name(x[0], name), as_name(x[1], name));
    }
    return out;
}

std::vector<std::vector<std::string>> family_list(const Json& doc, const std::string& name) {
    const Json& v = field(doc, name);
    if (!v.is_array()) throw ParseError("field '" + name + "': expected a list of sets");
    std::vector<std::vector<std::string>> out;
    for (const auto& x : v) {
        if (!x.is_array()) throw ParseError("field '" + name + "': expected a list of sets");
        std::vector<std::string> members;
        for (const auto& m : x) members.push_back(as_name(m, name));
        out.push_back(std::move(members));
    }
    return out;
}

void require_distinct(const std::vector<std::string>& names, const std::string& where) {
    auto sorted = names;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) throw ParseError("field '" + where + "': duplicate name '" + *dup + "'");
}

Index lookup(const std::vector<std::string>& names, const std::string& name, const std::string& where) {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw ParseError("field '" + where + "': unknown name '" + name + "'");
    return static_cast<Index>(it - names.begin());
}

Subset subset_from(const std::vector<std::string>& names, const std::vector<std::string>& members,
                   const std::string& where) {
    Subset s(names.size());
    for (const auto& m : members) s.set(lookup(names, m, where));
    return s;
}

Json name_array(const Subset& s, const std::vector<std::string>& names) {
    Json out = Json::array();
    for (Index i : members(s)) out.push_back(names[i]);
    return out;
}

Json names_json(const std::vector<std::string>& names) {
    Json out = Json::array();
    for (const auto& n : names) out.push_back(n);
    return out;
}

Json cover_pairs(const FinPoset& p) {
    Json out = Json::array();
    for (auto [a, b] : p.covers()) out.push_back(Json::array({p.name(a), p.name(b)}));
    return out;
}

Json pairs_json(const NamePairs& pairs) {
    Json out = Json::array();
    for (const auto& [a, b] : pairs) out.push_back(Json::array({a, b}));
    return out;
}

bool plain_scalar(const std::string& s) {
    if (s.empty()) return false;
    const unsigned char first = static_cast<unsigned char>(s[0]);
    if (!std::isalnum(first) && s[0] != '_' && s[0] != '^') return false;
    for (char c : s) {
        const unsigned char u = static_cast<unsigned char>(c);
        if (!std::isalnum(u) && std::string_view("_.^+|-").find(c) == std::string_view::npos) return false;
    }
    std::string lower;
    for (char c : s) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    for (const char* word : {"true", "false", "null", "yes", "no", "on", "off", "y", "n"})
        if (lower == word) return false;
    return true;
}

std::string scalar_text(const Json& v) {
    if (v.is_string()) {
        const auto s = v.get<std::string>();
        if (plain_scalar(s)) return s;
        return Json(s).dump();  // JSON string escaping is valid YAML double-quoting
    }
    if (v.is_null()) return "~";
    return v.dump();
}

std::string flow_text(const Json& v) {
    if (v.is_array()) {
        std::string out = "[";
        for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + flow_text(v[i]);
        return out + "]";
    }
    if (v.is_object()) {
        std::string out = "{";
        bool first = true;
        for (const auto& [k, x] : v.items()) {
            out += (first ? "" : ", ") + scalar_text(k) + ": " + flow_text(x);
            first = false;
        }
        return out + "}";
    }
    return scalar_text(v);
}

void block_text(const Json& obj, int indent, std::string& out) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    for (const auto& [k, v] : obj.items()) {
        if (v.is_object() && !v.empty()) {
            out += pad + scalar_text(k) + ":\n";
            block_text(v, indent + 2, out);
        } else if (v.is_array() && !v.empty() && std::any_of(v.begin(), v.end(), [](const Json& x) { return x.is_object(); })) {
            out += pad + scalar_text(k) + ":\n";
            for (const auto& x : v) out += pad + "  - " + flow_text(x) + "\n";
        } else {
            out += pad + scalar_text(k) + ": " + flow_text(v) + "\n";
        }
    }
}

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '\n') {
            out += "\\n";
            continue;
        }
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

std::string hasse(const FinPoset& p, const std::string& title, const std::vector<std::string>& labels) {
    std::ostringstream out;
    out << "digraph \"" << dot_escape(title) << "\" {\n  rankdir=BT;\n  node [shape=box];\n";
    for (Index i = 0; i < p.size(); ++i) out << "  n" << i << " [label=\"" << dot_escape(labels[i]) << "\"];\n";
    for (auto [a, b] : p.covers()) out << "  n" << a << " -> n" << b << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace

Json parse_document(const std::string& content) {
    const auto first = content.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && content[first] == '{') {
        try {
            return Json::parse(content);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(std::string("JSON ") + e.what());
        }
    }
    try {
        YAML::Node node = YAML::Load(content);
        if (!node.IsMap()) throw ParseError("document is not a mapping");
        return from_yaml(node);
    } catch (const YAML::Exception& e) {
        throw ParseError("line " + std::to_string(e.mark.line + 1) + ": " + e.msg);
    }
}

Json load_document(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str());
}

std::string kind_of(const Json& doc) {
    const Json& k = field(doc, "kind");
    if (!k.is_string()) throw ParseError("field 'kind': expected a string");
    return k.get<std::string>();
}

std::string emit(const Json& doc, Format format) {
    if (format == Format::Json) return doc.dump(2) + "\n";
    std::string out;
    if (doc.is_object())
        block_text(doc, 0, out);
    else
        out = flow_text(doc) + "\n";
    return out;
}

Result<FinPoset> decode_poset(const Json& doc) {
    const auto elements = name_list(doc, "elements");
    require_distinct(elements, "elements");
    NamePairs leq;
    if (doc.contains("leq")) leq = pair_list(doc, "leq");
    for (const auto& [a, b] : leq) {
        lookup(elements, a, "leq");
        lookup(elements, b, "leq");
    }
    try {
        return FinPoset::from_relation(elements, leq);
    } catch (const Error& e) {
        return Diagnostic{"order", e.what()};
    }
}

Result<FinLattice> decode_lattice(const Json& doc) {
    auto p = decode_poset(doc);
    if (!p) return p.diagnostics();
    auto l = FinLattice::from_poset(p.value());
    if (!l) return Diagnostic{"lattice", "some pair lacks a meet or a join, or the poset is empty"};
    return *l;
}

Polarity decode_polarity(const Json& doc) {
    const auto k = name_list(doc, "k");
    const auto o = name_list(doc, "o");
    require_distinct(k, "k");
    require_distinct(o, "o");
    const auto rel = pair_list(doc, "rel");
    for (const auto& [a, b] : rel) {
        lookup(k, a, "rel");
        lookup(o, b, "rel");
    }
    return Polarity::from_pairs(k, o, rel);
}

Result<BiDcpo> decode_bidcpo(const Json& doc) { return validate_bidcpo(decode_polarity(doc)); }

Result<KoSpace> decode_kospace(const Json& doc) {
    const auto elements = name_list(doc, "elements");
    require_distinct(elements, "elements");
    std::vector<Subset> k, o;
    for (const auto& m : family_list(doc, "kfam")) k.push_back(subset_from(elements, m, "kfam"));
    for (const auto& m : family_list(doc, "ofam")) o.push_back(subset_from(elements, m, "ofam"));
    if (!doc.contains("leq")) return validate_kospace_alt(elements, k, o);
    auto p = decode_poset(doc);
    if (!p) return p.diagnostics();
    // families were read against input positions; move them to the sorted order
    std::vector<Subset> kk, oo;
    auto remap = [&](const Subset& s) {
        Subset out(elements.size());
        for (Index i : members(s)) out.set(p.value().index_of(elements[i]));
        return out;
    };
    for (const auto& s : k) kk.push_back(remap(s));
    for (const auto& s : o) oo.push_back(remap(s));
    return validate_kospace(p.value(), std::move(kk), std::move(oo));
}

Result<FinTopSpace> decode_topspace(const Json& doc) {
    const auto points = name_list(doc, "points");
    require_distinct(points, "points");
    std::vector<Subset> opens;
    for (const auto& m : family_list(doc, "opens")) opens.push_back(subset_from(points, m, "opens"));
    return FinTopSpace::make(points, opens);
}

Result<Dirspace> decode_dirspace(const Json& doc) {
    const auto points = name_list(doc, "points");
    require_distinct(points, "points");
    std::vector<Subset> opens;
    for (const auto& m : family_list(doc, "opens")) opens.push_back(subset_from(points, m, "opens"));
    return Dirspace::make(points, opens);
}

Result<EmbeddedBiDcpo> decode_embedded(const Json& doc) {
    auto l = decode_lattice(field(doc, "lattice"));
    if (!l) return l.diagnostics();
    const auto& lat = l.value();
    auto pick = [&](const std::string& name) {
        Subset s(lat.size());
        for (const auto& n : name_list(doc, name)) {
            auto i = lat.poset().find(n);
            if (!i) throw ParseError("field '" + name + "': unknown name '" + n + "'");
            s.set(*i);
        }
        return s;
    };
    auto d = DoubleBaseLattice::make(lat, pick("kset"), pick("oset"));
    if (!d) return d.diagnostics();
    return validate_embedded(std::move(d).value());
}

Result<CRelation> decode_crelation(const Json& doc) {
    auto s = decode_kospace(field(doc, "source"));
    auto t = decode_kospace(field(doc, "target"));
    Diagnostics diags;
    if (!s) diags = s.diagnostics();
    if (!t) diags.insert(diags.end(), t.diagnostics().begin(), t.diagnostics().end());
    if (!diags.empty()) return diags;
    const auto pairs = pair_list(doc, "pairs");
    std::vector<std::pair<Index, Index>> idx;
    for (const auto& [a, b] : pairs) {
        auto x = s.value().base().find(a);
        auto y = t.value().base().find(b);
        if (!x || !y) throw ParseError("field 'pairs': unknown name in pair (" + a + ", " + b + ")");
        idx.emplace_back(*x, *y);
    }
    // The listed pairs must already form a weakening relation.
    WeakRel closed = WeakRel::closure_of(s.value().base(), t.value().base(), idx);
    if (closed.pairs().size() != [&] {
            auto sorted = idx;
            std::sort(sorted.begin(), sorted.end());
            sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
            return sorted.size();
        }())
        return Diagnostic{"weakening", "pairs are not closed under weakening"};
    return validate_crelation(std::move(closed), std::move(s).value(), std::move(t).value());
}

Result<GaloisMorphism> decode_galois(const Json& doc) {
    Polarity s = decode_polarity(field(doc, "source"));
    Polarity t = decode_polarity(field(doc, "target"));
    auto table = [&](const std::string& name, const std::vector<std::string>& from,
                     const std::vector<std::string>& to) {
        std::vector<std::optional<Index>> out(from.size());
        for (const auto& [a, b] : pair_list(doc, name)) {
            const Index i = lookup(from, a, name);
            if (out[i]) throw ParseError("field '" + name + "': '" + a + "' mapped twice");
            out[i] = lookup(to, b, name);
        }
        std::vector<Index> f;
        for (Index i = 0; i < from.size(); ++i) {
            if (!out[i]) throw ParseError("field '" + name + "': no image for '" + from[i] + "'");
            f.push_back(*out[i]);
        }
        return f;
    };
    auto fwd = table("fwd", s.k_names(), t.k_names());
    auto bwd = table("bwd", t.o_names(), s.o_names());
    return GaloisMorphism::make(std::move(s), std::move(t), std::move(fwd), std::move(bwd));
}

Json encode(const FinPoset& p, const std::string& kind) {
    Json j;
    j["kind"] = kind;
    j["elements"] = names_json(p.names());
    j["leq"] = cover_pairs(p);
    return j;
}

Json encode(const FinLattice& l) { return encode(l.poset(), "lattice"); }

Json encode(const Polarity& p, const std::string& kind) {
    Json j;
    j["kind"] = kind;
    j["k"] = names_json(p.k_names());
    j["o"] = names_json(p.o_names());
    j["rel"] = pairs_json(p.pairs());
    return j;
}

Json encode(const BiDcpo& b) { return encode(b.pol(), "bidcpo"); }

Json encode(const KoSpace& s) {
    Json j;
    j["kind"] = "kospace";
    j["elements"] = names_json(s.base().names());
    j["leq"] = cover_pairs(s.base());
    Json k = Json::array(), o = Json::array();
    for (const auto& m : s.kfam().members()) k.push_back(name_array(m, s.base().names()));
    for (const auto& m : s.ofam().members()) o.push_back(name_array(m, s.base().names()));
    j["kfam"] = k;
    j["ofam"] = o;
    return j;
}

Json encode(const FinTopSpace& t) {
    Json j;
    j["kind"] = "topspace";
    j["points"] = names_json(t.points());
    Json o = Json::array();
    for (const auto& u : t.opens()) o.push_back(name_array(u, t.points()));
    j["opens"] = o;
    return j;
}

Json encode(const Dirspace& d) {
    Json j;
    j["kind"] = "dirspace";
    j["points"] = names_json(d.points());
    Json o = Json::array();
    for (const auto& u : d.opens()) o.push_back(name_array(u, d.points()));
    j["opens"] = o;
    return j;
}

Json encode(const DoubleBaseLattice& d, const std::string& kind) {
    Json j;
    j["kind"] = kind;
    Json l = encode(d.lattice());
    l.erase("kind");
    j["lattice"] = l;
    j["kset"] = name_array(d.kset(), d.lattice().poset().names());
    j["oset"] = name_array(d.oset(), d.lattice().poset().names());
    return j;
}

Json encode(const EmbeddedBiDcpo& e) { return encode(e.dbl(), "embedded"); }

Json encode(const WeakRel& r) {
    Json j;
    j["kind"] = "weakrel";
    Json s = encode(r.source());
    Json t = encode(r.target());
    s.erase("kind");
    t.erase("kind");
    j["source"] = s;
    j["target"] = t;
    j["pairs"] = pairs_json(r.pairs());
    return j;
}

Json encode(const CRelation& r) {
    Json j;
    j["kind"] = "crelation";
    j["source"] = encode(r.source());
    j["target"] = encode(r.target());
    j["pairs"] = pairs_json(r.rel().pairs());
    return j;
}

Json encode(const GaloisMorphism& m) {
    Json j;
    j["kind"] = "galois";
    j["source"] = encode(m.source());
    j["target"] = encode(m.target());
    NamePairs fwd, bwd;
    for (Index k = 0; k < m.fwd().size(); ++k) fwd.emplace_back(m.source().k_names()[k], m.target().k_names()[m.fwd()[k]]);
    for (Index u = 0; u < m.bwd().size(); ++u) bwd.emplace_back(m.target().o_names()[u], m.source().o_names()[m.bwd()[u]]);
    j["fwd"] = pairs_json(fwd);
    j["bwd"] = pairs_json(bwd);
    return j;
}

Json encode(const ConceptLattice& c) {
    Json j;
    j["kind"] = "concept-lattice";
    Json cs = Json::array();
    for (Index i = 0; i < c.size(); ++i) {
        Json x;
        x["name"] = c.lattice().name(i);
        x["extent"] = name_array(c.concepts()[i].extent, c.source().k_names());
        x["intent"] = name_array(c.concepts()[i].intent, c.source().o_names());
        cs.push_back(x);
    }
    j["concepts"] = cs;
    j["leq"] = cover_pairs(c.lattice().poset());
    return j;
}

Json encode(const LCReport& r) {
    Json j;
    j["locally_compact"] = r.locally_compact;
    j["bicontinuous"] = r.bicontinuous;
    j["lc_witnesses"] = r.lc_witnesses;
    j["bicontinuity_witnesses"] = r.bicontinuity_witnesses;
    return j;
}

Json encode(const FramePipelineReport& r) {
    Json j;
    j["kind"] = "frame-pipeline";
    j["points"] = names_json(r.points);
    j["filters"] = pairs_json(r.filters);
    j["lattice_to_opens"] = pairs_json(r.lattice_to_opens);
    j["opens_to_lattice"] = pairs_json(r.opens_to_lattice);
    Json checks = Json::object();
    for (const auto& [name, ok] : r.checks) checks[name] = ok;
    j["checks"] = checks;
    return j;
}

std::string dot(const FinPoset& p, const std::string& title) { return hasse(p, title, p.names()); }

std::string dot(const ConceptLattice& c) {
    std::vector<std::string> labels;
    for (Index i = 0; i < c.size(); ++i)
        labels.push_back(c.lattice().name(i) + "\nextent " + set_name(c.concepts()[i].extent, c.source().k_names()) +
                         "\nintent " + set_name(c.concepts()[i].intent, c.source().o_names()));
    return hasse(c.lattice().poset(), "concept-lattice", labels);
}

std::string dot(const DoubleBaseLattice& d) {
    std::vector<std::string> labels;
    const auto& l = d.lattice();
    for (Index i = 0; i < l.size(); ++i) {
        std::string tag;
        if (d.kset().test(i)) tag += "k";
        if (d.oset().test(i)) tag += tag.empty() ? "o" : ",o";
        labels.push_back(tag.empty() ? l.name(i) : l.name(i) + " [" + tag + "]");
    }
    return hasse(l.poset(), "double-base", labels);
}

std::string dot(const KoSpace& s) {
    const auto e = kospace_to_embedded(s);
    std::vector<std::string> labels;
    const auto& l = e.dbl().lattice();
    for (Index i = 0; i < l.size(); ++i) {
        std::string tag;
        if (e.dbl().kset().test(i)) tag += "k";
        if (e.dbl().oset().test(i)) tag += tag.empty() ? "o" : ",o";
        labels.push_back(tag.empty() ? l.name(i) : l.name(i) + " [" + tag + "]");
    }
    return hasse(l.poset(), "kospace", labels);
}

}  // namespace kodual::io
