#include "motcalc/suites.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <random>
#include <sstream>

#include "motcalc/errors.hpp"
#include "motcalc/oracles.hpp"
#include "motcalc/tower.hpp"

namespace motcalc::verify {

bool SuiteReport::all_passed() const {
    return std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.passed; });
}

std::size_t SuiteReport::failure_count() const {
    return static_cast<std::size_t>(
        std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return !c.passed; }));
}

std::string SuiteReport::to_text() const {
    std::ostringstream os;
    for (const CaseResult& c : cases) {
        os << suite << ' ' << c.id << ' ' << (c.passed ? "PASS" : "FAIL");
        if (!c.detail.empty()) os << ' ' << c.detail;
        os << '\n';
    }
    return os.str();
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"grassmann", "duality",     "flags",
                                                   "kunneth",   "weyl-orders", "tower"};
    return names;
}

namespace {

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
    // Modulo draw: biased in general but deterministic across platforms,
    // which matters more here than uniformity.
    return lo + rng() % (hi - lo + 1);
}

std::string pad(unsigned value, int width) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%0*u", width, value);
    return buf;
}

std::string lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

std::string mismatch_detail(const char* what, const TateMotive& got, const TateMotive& want) {
    std::ostringstream os;
    os << what << ": got [" << got.multiplicity_line() << "], want [" << want.multiplicity_line()
       << "]";
    return os.str();
}

std::vector<RootSystem> diagrams_up_to_rank(unsigned bound) {
    std::vector<RootSystem> out;
    for (unsigned n = 1; n <= bound; ++n) out.push_back(RootSystem::build('A', n));
    for (unsigned n = 2; n <= bound; ++n) out.push_back(RootSystem::build('B', n));
    for (unsigned n = 3; n <= bound; ++n) out.push_back(RootSystem::build('C', n));
    for (unsigned n = 4; n <= bound; ++n) out.push_back(RootSystem::build('D', n));
    for (unsigned n = 6; n <= std::min(bound, 8U); ++n) out.push_back(RootSystem::build('E', n));
    if (bound >= 4) out.push_back(RootSystem::build('F', 4));
    if (bound >= 2) out.push_back(RootSystem::build('G', 2));
    return out;
}

std::string levi_id(const ParabolicSpec& p) {
    if (p.levi.empty()) return "levi-none";
    std::string s = "levi-";
    bool first = true;
    for (unsigned i : p.levi) {
        if (!first) s += ',';
        first = false;
        s += std::to_string(i);
    }
    return s;
}

void run_grassmann(const SuiteOptions& opts, std::vector<CaseResult>& cases) {
    for (unsigned n = 2; n <= opts.bound; ++n) {
        for (unsigned d = 1; d < n; ++d) {
            CaseResult c;
            c.id = "gr-n" + pad(n, 2) + "-d" + pad(d, 2);
            const TateMotive from_fibre = fibre_motive(Grassmannian{d, n}, opts.max_orbit);
            const TateMotive from_boxes = partitions_in_box(d, n - d);
            const TateMotive from_qbinom = gaussian_binomial(n, d);
            ParabolicSpec par;
            for (unsigned i = 1; i < n; ++i)
                if (i != d) par.levi.insert(i);
            const TateMotive from_cosets =
                gp_motive(RootSystem::build('A', n - 1), par, opts.max_orbit);
            if (from_fibre != from_boxes)
                c = {c.id, false, mismatch_detail("constructor vs partitions", from_fibre,
                                                  from_boxes)};
            else if (from_fibre != from_qbinom)
                c = {c.id, false, mismatch_detail("constructor vs q-binomial", from_fibre,
                                                  from_qbinom)};
            else if (from_fibre != from_cosets)
                c = {c.id, false, mismatch_detail("constructor vs coset enumeration", from_fibre,
                                                  from_cosets)};
            cases.push_back(std::move(c));
        }
    }
}

void run_duality(const SuiteOptions& opts, std::vector<CaseResult>& cases) {
    for (const RootSystem& rs : diagrams_up_to_rank(opts.bound)) {
        const unsigned rank = rs.rank();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << rank); ++mask) {
            ParabolicSpec par;
            for (unsigned i = 0; i < rank; ++i)
                if (mask & (std::uint64_t{1} << i)) par.levi.insert(i + 1);
            CaseResult c;
            c.id = lower(rs.name()) + "-" + levi_id(par);
            const Integer expected = coset_count(rs, par);
            if (expected > static_cast<unsigned long>(opts.max_orbit)) {
                c.detail = "skipped: orbit size " + expected.get_str() + " exceeds cap " +
                           std::to_string(opts.max_orbit);
                cases.push_back(std::move(c));
                continue;
            }
            const CosetLengthProfile profile = coset_lengths(rs, par, opts.max_orbit);
            const unsigned dim = gp_dimension(rs, par);
            if (!profile.is_palindrome())
                c = {c.id, false, "profile not palindromic: " + profile.to_string()};
            else if (profile.max_length() != dim)
                c = {c.id, false,
                     "top length " + std::to_string(profile.max_length()) + ", want dim " +
                         std::to_string(dim)};
            else if (!profile.to_motive().is_self_dual(dim))
                c = {c.id, false, "motive not self-dual: " + profile.to_motive().to_string()};
            cases.push_back(std::move(c));
        }
    }
}

void run_flags(const SuiteOptions& opts, std::vector<CaseResult>& cases) {
    const unsigned top = std::min(opts.bound, 9U);  // the oracle lists n! permutations
    for (unsigned n = 1; n <= top; ++n) {
        CaseResult c;
        c.id = "flag-n" + std::to_string(n);
        const TateMotive from_perms = permutation_length_profile(n);
        const TateMotive from_cosets =
            n == 1 ? TateMotive::unit()
                   : gp_motive(RootSystem::build('A', n - 1), ParabolicSpec::borel(),
                               opts.max_orbit);
        if (from_cosets != from_perms)
            c = {c.id, false, mismatch_detail("coset enumeration vs inversions", from_cosets,
                                              from_perms)};
        cases.push_back(std::move(c));
    }
}

CellModel random_cells(std::mt19937_64& rng, unsigned max_cells, unsigned max_dim) {
    CellModel m;
    const auto count = draw(rng, 1, max_cells);
    for (std::uint64_t i = 0; i < count; ++i)
        m.cells.push_back(static_cast<unsigned>(draw(rng, 0, max_dim)));
    return m;
}

std::string cells_text(const CellModel& m) {
    std::string s;
    for (std::size_t i = 0; i < m.cells.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(m.cells[i]);
    }
    return s;
}

void run_kunneth(const SuiteOptions& opts, std::vector<CaseResult>& cases) {
    std::mt19937_64 rng(opts.seed);
    for (unsigned k = 0; k < opts.bound; ++k) {
        CaseResult c;
        c.id = "pair-" + pad(k, 4);
        const CellModel a = random_cells(rng, 10, 6);
        const CellModel b = random_cells(rng, 10, 6);
        const TateMotive direct = kunneth_cells(a, b);
        const TateMotive tensored = cell_motive(a) * cell_motive(b);
        if (direct != tensored) {
            c.passed = false;
            c.detail = "cells [" + cells_text(a) + "] x [" + cells_text(b) + "]: " +
                       mismatch_detail("product cells vs tensor", direct, tensored);
        }
        cases.push_back(std::move(c));
    }
}

void run_weyl_orders(const SuiteOptions& opts, std::vector<CaseResult>& cases) {
    for (const RootSystem& rs : diagrams_up_to_rank(opts.bound)) {
        CaseResult c;
        c.id = lower(rs.name());
        const Integer closed = closed_form_weyl_order(rs);
        if (closed > static_cast<unsigned long>(opts.max_orbit)) {
            c.detail = "skipped: |W| = " + closed.get_str() + " exceeds cap " +
                       std::to_string(opts.max_orbit);
            cases.push_back(std::move(c));
            continue;
        }
        const CosetLengthProfile borel = coset_lengths(rs, ParabolicSpec::borel(), opts.max_orbit);
        const Integer enumerated(static_cast<unsigned long>(borel.total()));
        if (enumerated != closed)
            c = {c.id, false,
                 "enumerated " + enumerated.get_str() + ", closed form " + closed.get_str()};
        else if (borel.max_length() != rs.num_positive_roots())
            c = {c.id, false,
                 "longest element has length " + std::to_string(borel.max_length()) + ", want " +
                     std::to_string(rs.num_positive_roots())};
        cases.push_back(std::move(c));
    }
}

FibreSpec random_fibre(std::mt19937_64& rng) {
    switch (draw(rng, 0, 2)) {
        case 0:
            return ProjectiveSpace{static_cast<unsigned>(draw(rng, 0, 4))};
        case 1: {
            const unsigned n = static_cast<unsigned>(draw(rng, 2, 6));
            const unsigned d = static_cast<unsigned>(draw(rng, 1, n - 1));
            return Grassmannian{d, n};
        }
        default:
            return ExplicitCells{random_cells(rng, 8, 6).cells};
    }
}

std::vector<Integer> dense(const TateMotive& m) {
    std::vector<Integer> v;
    if (m.is_zero()) return v;
    v.assign(m.top_twist() + 1, Integer(0));
    for (const auto& [t, c] : m.multiplicities()) v[t] = c;
    return v;
}

void run_tower(const SuiteOptions& opts, std::vector<CaseResult>& cases) {
    std::mt19937_64 rng(opts.seed);
    for (unsigned k = 0; k < opts.bound; ++k) {
        CaseResult c;
        c.id = "tower-" + pad(k, 4);
        TowerSpec t;
        t.base = PointBase{};
        const auto nfibres = draw(rng, 0, 3);
        for (std::uint64_t i = 0; i < nfibres; ++i) t.fibres.push_back(random_fibre(rng));

        std::string tower_text;
        for (std::size_t i = 0; i < t.fibres.size(); ++i) {
            if (i) tower_text += " | ";
            tower_text += fibre_to_string(t.fibres[i]);
        }

        const TateMotive motive = tower_motive(t, opts.max_orbit);
        // Re-fold the tensor product from the right to exercise associativity.
        TateMotive refolded = TateMotive::unit();
        Integer rank_product(1);
        for (auto it = t.fibres.rbegin(); it != t.fibres.rend(); ++it) {
            const TateMotive fm = fibre_motive(*it, opts.max_orbit);
            refolded = fm * refolded;
            rank_product *= fm.rank();
        }
        const std::vector<Integer> ranks = tower_chow_ranks(t, opts.max_orbit);
        Integer rank_sum(0);
        for (const Integer& r : ranks) rank_sum += r;

        if (motive != refolded)
            c = {c.id, false,
                 "[" + tower_text + "] " +
                     mismatch_detail("left fold vs right fold", motive, refolded)};
        else if (dense(motive) != ranks)
            c = {c.id, false, "[" + tower_text + "] Chow ranks disagree with motive"};
        else if (rank_sum != rank_product)
            c = {c.id, false,
                 "[" + tower_text + "] total rank " + rank_sum.get_str() +
                     ", fibre rank product " + rank_product.get_str()};
        cases.push_back(std::move(c));
    }
}

}  // namespace

SuiteReport run_suite(const std::string& name, const SuiteOptions& opts) {
    SuiteReport report;
    report.suite = name;
    report.bound = opts.bound;
    report.seed = opts.seed;
    if (opts.bound == 0) throw DomainError("suite bound must be positive");

    if (name == "grassmann")
        run_grassmann(opts, report.cases);
    else if (name == "duality")
        run_duality(opts, report.cases);
    else if (name == "flags")
        run_flags(opts, report.cases);
    else if (name == "kunneth")
        run_kunneth(opts, report.cases);
    else if (name == "weyl-orders")
        run_weyl_orders(opts, report.cases);
    else if (name == "tower")
        run_tower(opts, report.cases);
    else {
        std::string known;
        for (const std::string& s : suite_names()) {
            if (!known.empty()) known += ", ";
            known += s;
        }
        throw DomainError("unknown suite '" + name + "'; expected one of: " + known);
    }

    std::sort(report.cases.begin(), report.cases.end(),
              [](const CaseResult& a, const CaseResult& b) { return a.id < b.id; });
    return report;
}

}  // namespace motcalc::verify
