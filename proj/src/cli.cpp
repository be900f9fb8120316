#include "motcalc/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "motcalc/ck_assembly.hpp"
#include "motcalc/errors.hpp"
#include "motcalc/json_io.hpp"
#include "motcalc/suites.hpp"

namespace motcalc::cli {

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot open \"" + path + "\" for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::set<unsigned> parse_levi_list(const std::string& text) {
    std::set<unsigned> levi;
    if (text.empty()) return levi;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string_view item(text.data() + pos, comma - pos);
        unsigned value = 0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size())
            throw DomainError("bad levi list \"" + text +
                              "\": expected comma-separated simple-root indices");
        levi.insert(value);
        pos = comma + 1;
    }
    return levi;
}

std::string join_unsigned(const std::vector<unsigned>& values) {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(values[i]);
    }
    return s;
}

std::string join_ranks(const std::vector<Integer>& values) {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) s += ' ';
        s += values[i].get_str();
    }
    return s;
}

std::string base_description(const BaseSpec& base) {
    if (std::holds_alternative<PointBase>(base)) return "point";
    if (const auto* tb = std::get_if<TateBase>(&base)) {
        const std::string line = tb->motive.multiplicity_line();
        return line.empty() ? "tate (zero motive)" : "tate " + line;
    }
    const auto& fc = std::get<FreeChowBase>(base);
    return "chow ranks " + join_ranks(fc.ranks) + " (dim " + std::to_string(fc.dim) + ")";
}

struct DecomposeArgs {
    std::string input;
    std::vector<std::string> fibre_texts;
    std::string higher_chow_path;
    std::string format = "table";
};

void cmd_decompose(const DecomposeArgs& a, std::uint64_t max_orbit, std::ostream& out) {
    TowerSpec tower;
    if (!a.input.empty()) {
        tower = io::tower_from_string(read_input(a.input));
    } else {
        tower.base = PointBase{};
        for (const std::string& text : a.fibre_texts) tower.fibres.push_back(parse_fibre(text));
    }
    for (const FibreSpec& f : tower.fibres) validate_fibre(f);
    validate_base(tower.base);

    std::vector<unsigned> fibre_dims;
    for (const FibreSpec& f : tower.fibres) fibre_dims.push_back(fibre_dimension(f));

    const std::vector<Integer> chow_ranks = tower_chow_ranks(tower, max_orbit);
    const bool has_motive = !std::holds_alternative<FreeChowBase>(tower.base);
    TateMotive motive;
    if (has_motive) motive = tower_motive(tower, max_orbit);

    bool has_higher = false;
    RankTable higher;
    if (!a.higher_chow_path.empty()) {
        const RankTable base_table = io::rank_table_from_string(read_input(a.higher_chow_path));
        higher = higher_chow_table(base_table, tower.fibres, max_orbit);
        has_higher = true;
    }

    if (a.format == "json") {
        io::Json doc = io::Json::object();
        doc["tower"] = io::tower_to_json(tower);
        doc["fibre_dims"] = fibre_dims;
        doc["chow_ranks"] = io::Json::array();
        for (const Integer& r : chow_ranks) doc["chow_ranks"].push_back(r.get_str());
        if (has_motive) {
            doc["motive"] = io::motive_to_json(motive);
            doc["poincare"] = motive.to_string();
        }
        if (has_higher) doc["higher_chow"] = io::rank_table_to_json(higher);
        out << doc.dump(2) << '\n';
        return;
    }

    std::string fibre_list;
    for (std::size_t i = 0; i < tower.fibres.size(); ++i) {
        if (i) fibre_list += " | ";
        fibre_list += fibre_to_string(tower.fibres[i]);
    }
    out << "base:        " << base_description(tower.base) << '\n';
    out << "fibres:      " << (fibre_list.empty() ? "(none)" : fibre_list) << '\n';
    out << "fibre dims:  " << join_unsigned(fibre_dims) << '\n';
    if (has_motive) {
        out << "motive:      " << motive.multiplicity_line() << '\n';
        out << "poincare:    " << motive.to_string() << '\n';
    }
    out << "chow ranks:  " << join_ranks(chow_ranks) << '\n';
    if (has_higher) {
        out << "higher chow:" << '\n';
        const std::string table = higher.to_string();
        if (!table.empty()) out << table << '\n';
    }
}

struct GpArgs {
    std::string type;
    unsigned rank = 0;
    std::string levi_text;
};

void cmd_gp(const GpArgs& a, std::uint64_t max_orbit, std::ostream& out) {
    if (a.type.size() != 1)
        throw DomainError("type must be a single letter A..G, got \"" + a.type + "\"");
    const RootSystem rs = RootSystem::build(a.type[0], a.rank);
    ParabolicSpec par{parse_levi_list(a.levi_text)};
    validate_parabolic(rs, par);

    const CosetLengthProfile profile = coset_lengths(rs, par, max_orbit);
    const TateMotive motive = profile.to_motive();

    std::string levi_render;
    for (unsigned i : par.levi) {
        if (!levi_render.empty()) levi_render += ',';
        levi_render += std::to_string(i);
    }
    out << "space:       " << rs.name() << ", levi {" << levi_render << "}\n";
    out << "|W^P|:       " << profile.total() << '\n';
    out << "dim G/P:     " << gp_dimension(rs, par) << '\n';
    out << "profile:     " << profile.to_string() << '\n';
    out << "motive:      " << motive.to_string() << '\n';
}

struct CheckArgs {
    std::string suite;
    unsigned bound = 6;
    std::uint64_t seed = 1729;
};

int cmd_check(const CheckArgs& a, std::uint64_t max_orbit, std::ostream& out) {
    verify::SuiteOptions opts;
    opts.bound = a.bound;
    opts.seed = a.seed;
    opts.max_orbit = max_orbit;
    const verify::SuiteReport report = verify::run_suite(a.suite, opts);
    out << report.to_text();
    out << io::suite_report_to_json(report).dump() << '\n';
    return report.all_passed() ? 0 : 1;
}

struct HigherChowArgs {
    std::string table_path;
    std::vector<std::string> fibre_texts;
    std::string format = "table";
};

void cmd_higher_chow(const HigherChowArgs& a, std::uint64_t max_orbit, std::ostream& out) {
    const RankTable base = io::rank_table_from_string(read_input(a.table_path));
    std::vector<FibreSpec> fibres;
    for (const std::string& text : a.fibre_texts) fibres.push_back(parse_fibre(text));
    const RankTable result = higher_chow_table(base, fibres, max_orbit);
    if (a.format == "json") {
        out << io::rank_table_to_json(result).dump(2) << '\n';
        return;
    }
    const std::string table = result.to_string();
    out << table;
    if (!table.empty()) out << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Motivic decompositions of iterated fibre-bundle towers"};
    app.require_subcommand(1);

    std::uint64_t max_orbit = kDefaultMaxOrbit;
    app.add_option("--max-orbit", max_orbit,
                   "Largest orbit any single coset enumeration may visit")
        ->envname("MOTCALC_MAX_ORBIT");

    DecomposeArgs dec;
    CLI::App* decompose =
        app.add_subcommand("decompose", "Decompose a tower into Tate twists and Chow ranks");
    decompose->fallthrough();
    CLI::Option* input_opt =
        decompose->add_option("--input", dec.input, "Tower document (JSON file, or - for stdin)");
    decompose
        ->add_option("--fibre", dec.fibre_texts,
                     "Inline fibre over a point base, e.g. \"P 1\", \"Gr 2 4\", "
                     "\"GP B 3 levi=1,2\", \"cells 0,1,1,2\" (repeatable)")
        ->excludes(input_opt);
    decompose->add_option("--higher-chow", dec.higher_chow_path,
                          "Base higher-Chow rank table (JSON file) to convolve");
    decompose->add_option("--format", dec.format, "Output format")
        ->check(CLI::IsMember({"table", "json"}))
        ->capture_default_str();

    GpArgs gp;
    CLI::App* gp_cmd = app.add_subcommand(
        "gp", "Coset length profile and motive of G/P (Bourbaki numbering)");
    gp_cmd->fallthrough();
    gp_cmd->add_option("type", gp.type, "Type letter: A, B, C, D, E, F, or G")->required();
    gp_cmd->add_option("rank", gp.rank, "Rank of the root system")->required();
    gp_cmd->add_option("--levi", gp.levi_text,
                       "Simple roots of the Levi, e.g. 1,3 (empty = Borel)");

    CheckArgs chk;
    CLI::App* check = app.add_subcommand("check", "Run a brute-force verification suite");
    check->fallthrough();
    check
        ->add_option("suite", chk.suite,
                     "One of: grassmann, duality, flags, kunneth, weyl-orders, tower")
        ->required();
    check->add_option("--bound", chk.bound, "Size bound / number of random cases")
        ->capture_default_str();
    check->add_option("--seed", chk.seed, "Seed for the randomized suites")
        ->capture_default_str();

    HigherChowArgs hc;
    CLI::App* higher =
        app.add_subcommand("higher-chow", "Convolve a higher-Chow rank table with fibres");
    higher->fallthrough();
    higher->add_option("--table", hc.table_path, "Base rank table (JSON file)")->required();
    higher->add_option("--fibre", hc.fibre_texts, "Fibre descriptor (repeatable)");
    higher->add_option("--format", hc.format, "Output format")
        ->check(CLI::IsMember({"table", "json"}))
        ->capture_default_str();

    int exit_code = 0;
    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
        if (decompose->parsed())
            cmd_decompose(dec, max_orbit, out);
        else if (gp_cmd->parsed())
            cmd_gp(gp, max_orbit, out);
        else if (check->parsed())
            exit_code = cmd_check(chk, max_orbit, out);
        else if (higher->parsed())
            cmd_higher_chow(hc, max_orbit, out);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << '\n';
        return 3;
    }
    return exit_code;
}

}  // namespace motcalc::cli
