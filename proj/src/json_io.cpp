#include "motcalc/json_io.hpp"

#include <charconv>
#include <limits>

#include "motcalc/errors.hpp"

namespace motcalc::io {

namespace {

void reject_unknown_keys(const Json& obj, std::initializer_list<const char*> allowed,
                         const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        bool known = false;
        for (const char* a : allowed)
            if (key == a) known = true;
        if (!known) throw DomainError("unknown key \"" + key + "\" in " + where);
    }
}

unsigned small_unsigned(const Json& v, const std::string& what, unsigned max) {
    const Integer n = integer_from_json(v, what);
    if (n > max)
        throw DomainError(what + " = " + n.get_str() + " is out of range (max " +
                          std::to_string(max) + ")");
    return static_cast<unsigned>(n.get_ui());
}

unsigned parse_unsigned_key(const std::string& key, const std::string& what) {
    unsigned value = 0;
    const auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), value);
    if (ec != std::errc{} || ptr != key.data() + key.size())
        throw DomainError(what + " key \"" + key + "\" is not a nonnegative integer");
    return value;
}

}  // namespace

Integer integer_from_json(const Json& v, const std::string& what) {
    if (v.is_number_unsigned()) return Integer(static_cast<unsigned long>(v.get<std::uint64_t>()));
    if (v.is_number_integer()) throw DomainError(what + " must be nonnegative");
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        if (s.empty()) throw DomainError(what + " is an empty string");
        for (char c : s)
            if (c < '0' || c > '9')
                throw DomainError(what + " string \"" + s + "\" is not a nonnegative integer");
        return Integer(s);
    }
    throw DomainError(what + " must be a nonnegative integer or a digit string");
}

TowerSpec tower_from_json(const Json& doc) {
    if (!doc.is_object()) throw DomainError("tower document must be a JSON object");
    reject_unknown_keys(doc, {"base", "fibres"}, "tower document");
    if (!doc.contains("base")) throw DomainError("tower document needs a \"base\" key");

    TowerSpec t;
    const Json& base = doc.at("base");
    if (base.is_string()) {
        if (base.get<std::string>() != "point")
            throw DomainError("base string must be \"point\", got \"" + base.get<std::string>() +
                              "\"");
        t.base = PointBase{};
    } else if (base.is_object() && base.contains("tate")) {
        reject_unknown_keys(base, {"tate"}, "base");
        const Json& tate = base.at("tate");
        if (!tate.is_object()) throw DomainError("\"tate\" must map twists to multiplicities");
        std::map<unsigned, Integer> mult;
        for (const auto& [key, value] : tate.items())
            mult[parse_unsigned_key(key, "twist")] += integer_from_json(value, "multiplicity");
        t.base = TateBase{TateMotive(std::move(mult))};
    } else if (base.is_object() && base.contains("chow_ranks")) {
        reject_unknown_keys(base, {"chow_ranks", "dim"}, "base");
        if (!base.contains("dim")) throw DomainError("a chow_ranks base needs a \"dim\" key");
        if (!base.at("chow_ranks").is_array())
            throw DomainError("\"chow_ranks\" must be an array");
        FreeChowBase fc;
        fc.dim = small_unsigned(base.at("dim"), "dim", 1u << 20);
        for (const Json& r : base.at("chow_ranks"))
            fc.ranks.push_back(integer_from_json(r, "chow rank"));
        t.base = std::move(fc);
    } else {
        throw DomainError(
            "base must be \"point\", {\"tate\": {...}}, or {\"chow_ranks\": [...], \"dim\": n}");
    }
    validate_base(t.base);

    if (doc.contains("fibres")) {
        const Json& fibres = doc.at("fibres");
        if (!fibres.is_array()) throw DomainError("\"fibres\" must be an array of strings");
        for (const Json& f : fibres) {
            if (!f.is_string()) throw DomainError("each fibre descriptor must be a string");
            t.fibres.push_back(parse_fibre(f.get<std::string>()));
        }
    }
    return t;
}

TowerSpec tower_from_string(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // The library message already carries line and column.
        throw DomainError(e.what());
    }
    return tower_from_json(doc);
}

Json tower_to_json(const TowerSpec& t) {
    Json doc = Json::object();
    if (std::holds_alternative<PointBase>(t.base)) {
        doc["base"] = "point";
    } else if (const auto* tb = std::get_if<TateBase>(&t.base)) {
        Json tate = Json::object();
        for (const auto& [twist, mult] : tb->motive.multiplicities())
            tate[std::to_string(twist)] = mult.get_str();
        doc["base"] = Json{{"tate", std::move(tate)}};
    } else {
        const auto& fc = std::get<FreeChowBase>(t.base);
        Json ranks = Json::array();
        for (const Integer& r : fc.ranks) ranks.push_back(r.get_str());
        doc["base"] = Json{{"chow_ranks", std::move(ranks)}, {"dim", fc.dim}};
    }
    Json fibres = Json::array();
    for (const FibreSpec& f : t.fibres) fibres.push_back(fibre_to_string(f));
    doc["fibres"] = std::move(fibres);
    return doc;
}

RankTable rank_table_from_json(const Json& doc) {
    if (!doc.is_object()) throw DomainError("rank table must be a JSON object");
    reject_unknown_keys(doc, {"entries"}, "rank table");
    if (!doc.contains("entries") || !doc.at("entries").is_array())
        throw DomainError("rank table needs an \"entries\" array");
    RankTable table;
    for (const Json& e : doc.at("entries")) {
        if (!e.is_object()) throw DomainError("each rank table entry must be an object");
        reject_unknown_keys(e, {"p", "q", "rank"}, "rank table entry");
        if (!e.contains("p") || !e.contains("q") || !e.contains("rank"))
            throw DomainError("each rank table entry needs \"p\", \"q\", and \"rank\"");
        table.add(small_unsigned(e.at("p"), "p", 1u << 20),
                  small_unsigned(e.at("q"), "q", 1u << 20),
                  integer_from_json(e.at("rank"), "rank"));
    }
    return table;
}

RankTable rank_table_from_string(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw DomainError(e.what());
    }
    return rank_table_from_json(doc);
}

Json rank_table_to_json(const RankTable& t) {
    Json entries = Json::array();
    for (const auto& [qp, rank] : t.entries())
        entries.push_back(
            Json{{"p", qp.second}, {"q", qp.first}, {"rank", rank.get_str()}});
    return Json{{"entries", std::move(entries)}};
}

Json motive_to_json(const TateMotive& m) {
    Json out = Json::object();
    for (const auto& [twist, mult] : m.multiplicities())
        out[std::to_string(twist)] = mult.get_str();
    return out;
}

Json suite_report_to_json(const verify::SuiteReport& r) {
    Json failed = Json::array();
    for (const auto& c : r.cases)
        if (!c.passed) failed.push_back(c.id);
    return Json{{"suite", r.suite},
                {"bound", r.bound},
                {"seed", r.seed},
                {"cases", r.cases.size()},
                {"failures", r.failure_count()},
                {"failed_ids", std::move(failed)},
                {"passed", r.all_passed()}};
}

}  // namespace motcalc::io
