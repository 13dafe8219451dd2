#include "charta/cli.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <Eigen/Dense>

#include "charta/builders.hpp"
#include "charta/chartable.hpp"
#include "charta/error.hpp"
#include "charta/fusion.hpp"
#include "charta/hopf.hpp"
#include "charta/json_io.hpp"
#include "charta/modular.hpp"
#include "charta/scalar.hpp"

namespace charta {

namespace {

int code_for(ErrKind k) {
    switch (k) {
        case ErrKind::parse: return 3;
        case ErrKind::validation: return 1;
        case ErrKind::computation: return 2;
    }
    return 2;
}

void push(RunReport& r, const std::string& name, bool pass, double residual = 0,
          const std::string& detail = {}) {
    r.checks.push_back({name, pass, residual, detail});
}

std::string first_fail(const ValidationReport& v) {
    for (const auto& c : v.checks)
        if (!c.pass) return c.name + ": " + c.detail;
    return {};
}

void fail_with_error(RunReport& r, const Error& e) {
    push(r, "error", false, 0, e.what());
    r.exit_code = code_for(e.kind());
}

void set_exit_from_checks(RunReport& r) {
    for (const auto& c : r.checks)
        if (!c.pass && r.exit_code == 0) r.exit_code = 2;
}

std::string format_real(double x) {
    if (std::abs(x) < 5e-10) x = 0;
    std::ostringstream os;
    os << std::setprecision(10) << x;
    return os.str();
}

// Display form of a [re, im] cell; exact precision lives in the JSON output.
std::string format_cplx(double re, double im) {
    if (std::abs(im) < 5e-10) return format_real(re);
    return format_real(re) + (im < 0 ? "-" : "+") + format_real(std::abs(im)) + "i";
}

std::string cell_from_json(const nlohmann::ordered_json& c) {
    if (c.is_array() && c.size() == 2) return format_cplx(c[0].get<double>(), c[1].get<double>());
    return c.dump();
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

nlohmann::ordered_json scalar_json(const CycNumber& k) { return Scalar(k).to_json(); }
nlohmann::ordered_json scalar_json(const Fp& k) { return nlohmann::ordered_json(k.v); }

template <class K>
nlohmann::ordered_json vector_json(const std::vector<K>& v) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& x : v) arr.push_back(scalar_json(x));
    return arr;
}

std::string detect_kind(const nlohmann::json& j) {
    if (!j.is_object()) throw parse_error("input must be a JSON object");
    if (j.contains("fusion")) return "ring";
    if (j.contains("s")) return "modular";
    if (j.contains("order") && j.contains("table")) return "group";
    if (j.contains("field") && j.contains("mult")) return "hopf";
    throw parse_error("cannot detect the input kind; pass --kind ring|modular|group|hopf");
}

void push_validation(RunReport& r, const ValidationReport& v) {
    for (const auto& c : v.checks) push(r, c.name, c.pass, 0, c.detail);
    if (!v.ok) r.exit_code = 1;
}

// Representation ring recovered from a character table: multiplicities by the
// orthogonality sum, duality by conjugate rows, dimensions from the identity
// column. Rounding beyond round_tol means the table is not a group table.
FusionRing ring_from_character_table(const CharacterTable& t, double& max_round) {
    const double round_tol = 1e-6;
    const int n = t.rank();
    double order = 0;
    for (const auto& s : t.class_sizes) order += s.real();
    FusionRing f;
    f.rank = n;
    f.fusion.assign((size_t)n * n * n, 0);
    f.dual.assign(n, -1);
    max_round = 0;
    for (int i = 0; i < n; ++i) {
        f.labels.push_back("X" + std::to_string(i));
        double deg = t.table[i][0].real();
        long d = std::lround(deg);
        max_round = std::max(max_round, std::abs(deg - (double)d));
        f.dims.push_back(Scalar(CycNumber::from_int(d)));
        for (int c = 0; c < n; ++c) {
            double diff = 0;
            for (int j = 0; j < n; ++j)
                diff = std::max(diff, std::abs(t.table[i][j] - std::conj(t.table[c][j])));
            if (diff <= round_tol) {
                f.dual[i] = c;
                break;
            }
        }
        if (f.dual[i] < 0)
            throw computation_error("no conjugate row for character " + std::to_string(i));
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Cplx acc = 0;
                for (int c = 0; c < n; ++c)
                    acc += t.class_sizes[c] * t.table[i][c] * t.table[j][c] *
                           std::conj(t.table[k][c]);
                acc /= order;
                long m = std::lround(acc.real());
                max_round = std::max(max_round, std::abs(acc - Cplx((double)m, 0)));
                if (m < 0)
                    throw computation_error("negative tensor multiplicity at (" +
                                            std::to_string(i) + ", " + std::to_string(j) + ", " +
                                            std::to_string(k) + ")");
                f.n(i, j, k) = m;
            }
    if (max_round > round_tol)
        throw computation_error("tensor multiplicities do not round to integers, residual " +
                                std::to_string(max_round));
    return f;
}

template <class K>
void hopf_report_impl(RunReport& r, const HopfAlgebra<K>& h) {
    ValidationReport v = validate_hopf(h);
    push(r, "axioms", v.ok, 0, first_fail(v));
    if (!v.ok) {
        r.exit_code = 1;
        return;
    }

    auto cf = class_functions(h);
    auto ce = center(h);
    IntegralSpaces<K> is = integrals(h);
    CointegralSpaces<K> cs = cointegrals(h);
    auto gl = grouplike_elements(h);
    auto pv = pivotal_elements(h);

    nlohmann::ordered_json a;
    a["dim"] = h.dim;
    a["class_functions_dim"] = (int)cf.size();
    a["center_dim"] = (int)ce.size();
    nlohmann::ordered_json ij;
    ij["left_dim"] = (int)is.left.size();
    ij["right_dim"] = (int)is.right.size();
    ij["categorical_dim"] = (int)is.categorical.size();
    a["integrals"] = std::move(ij);
    nlohmann::ordered_json cj;
    cj["right_dim"] = (int)cs.right.size();
    cj["ad_invariant_dim"] = (int)cs.ad_invariant.size();
    cj["categorical_dim"] = (int)cs.categorical.size();
    a["cointegrals"] = std::move(cj);
    a["unimodular_algebra"] = is.unimodular_algebra;
    a["unimodular_category"] = is.unimodular_category;
    a["grouplike_count"] = (int)gl.size();
    a["pivotal_count"] = (int)pv.size();
    nlohmann::ordered_json pvj = nlohmann::ordered_json::array();
    for (const auto& g : pv) pvj.push_back(vector_json(g));
    a["pivotal_elements"] = std::move(pvj);

    if (is.unimodular_category && !cs.categorical.empty()) {
        FourierPair<K> p = fourier_pair(h);
        a["maschke"] = scalar_json(maschke_indicator(h, p.integral));

        bool round_trip = true;
        std::string detail;
        for (size_t i = 0; i < ce.size() && round_trip; ++i) {
            auto f = fourier(h, p.cointegral, ce[i]);
            if (fourier_inv(h, p.integral, f) != ce[i]) {
                round_trip = false;
                detail = "center vector " + std::to_string(i) + " is not recovered";
            }
        }
        push(r, "fourier_round_trip", round_trip, 0, detail);

        bool radford = radford_check(h, p.cointegral, p.integral, h.counit).pass;
        std::string rdetail;
        for (size_t i = 0; i < cf.size() && radford; ++i) {
            if (!radford_check(h, p.cointegral, p.integral, cf[i]).pass) {
                radford = false;
                rdetail = "class function " + std::to_string(i) + " violates the trace identity";
            }
        }
        push(r, "radford", radford, 0, rdetail);
    } else {
        a["maschke"] = nullptr;
    }

    r.artifact = std::move(a);
    set_exit_from_checks(r);
}

template <class K>
void hopf_fourier_impl(RunReport& r, const HopfAlgebra<K>& h) {
    ValidationReport v = validate_hopf(h);
    push(r, "axioms", v.ok, 0, first_fail(v));
    if (!v.ok) {
        r.exit_code = 1;
        return;
    }
    FourierPair<K> p;
    try {
        p = fourier_pair(h);
    } catch (const Error& e) {
        push(r, "fourier_pair", false, 0, e.what());
        r.exit_code = 2;
        return;
    }
    push(r, "fourier_pair", true);

    auto ce = center(h);
    nlohmann::ordered_json a;
    a["dim"] = h.dim;
    a["cointegral"] = vector_json(p.cointegral);
    a["integral"] = vector_json(p.integral);
    a["center_dim"] = (int)ce.size();
    nlohmann::ordered_json tr = nlohmann::ordered_json::array();
    bool round_trip = true;
    std::string detail;
    for (size_t i = 0; i < ce.size(); ++i) {
        auto f = fourier(h, p.cointegral, ce[i]);
        tr.push_back(vector_json(f));
        if (round_trip && fourier_inv(h, p.integral, f) != ce[i]) {
            round_trip = false;
            detail = "center vector " + std::to_string(i) + " is not recovered";
        }
    }
    a["center_transforms"] = std::move(tr);
    push(r, "fourier_round_trip", round_trip, 0, detail);
    r.artifact = std::move(a);
    set_exit_from_checks(r);
}

} // namespace

nlohmann::ordered_json RunReport::to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    nlohmann::ordered_json cs = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json cj;
        cj["name"] = c.name;
        cj["pass"] = c.pass;
        cj["residual"] = c.residual;
        cj["detail"] = c.detail;
        cs.push_back(std::move(cj));
    }
    j["checks"] = std::move(cs);
    j["artifact"] = artifact;
    j["exit_code"] = exit_code;
    return j;
}

std::string RunReport::to_text() const {
    std::ostringstream os;
    os << "command: " << command << "\n";
    for (const auto& c : checks) {
        os << "check " << std::left << std::setw(20) << c.name << (c.pass ? "pass" : "FAIL");
        if (c.residual > 0) os << "  residual " << std::setprecision(3) << c.residual
                               << std::setprecision(6);
        if (!c.detail.empty()) os << "  " << c.detail;
        os << "\n";
    }
    if (artifact.is_object() && artifact.contains("table")) {
        const auto& table = artifact["table"];
        const auto& sizes = artifact["class_sizes"];
        const size_t m = sizes.size();
        std::vector<std::vector<std::string>> cells;
        std::vector<std::string> head{""};
        for (size_t c = 0; c < m; ++c) head.push_back("C" + std::to_string(c));
        cells.push_back(std::move(head));
        for (size_t i = 0; i < table.size(); ++i) {
            std::vector<std::string> row{"chi_" + std::to_string(i)};
            for (const auto& cell : table[i]) row.push_back(cell_from_json(cell));
            cells.push_back(std::move(row));
        }
        std::vector<std::string> last{"size"};
        for (const auto& cell : sizes) last.push_back(cell_from_json(cell));
        cells.push_back(std::move(last));

        std::vector<size_t> width(m + 1, 0);
        for (const auto& row : cells)
            for (size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
        for (const auto& row : cells) {
            for (size_t c = 0; c < row.size(); ++c) {
                if (c == 0) os << std::left << std::setw((int)width[0] + 2) << row[c];
                else os << std::right << std::setw((int)width[c] + 2) << row[c];
            }
            os << "\n";
        }
    } else if (artifact.is_object()) {
        for (const auto& [key, value] : artifact.items())
            os << key << ": " << value.dump() << "\n";
    }
    os << "exit: " << exit_code << "\n";
    return os.str();
}

std::string RunReport::to_csv() const {
    std::ostringstream os;
    os << "# command: " << command << "\n";
    for (const auto& c : checks)
        os << "# check," << c.name << "," << (c.pass ? "pass" : "fail") << "," << c.residual
           << "," << csv_quote(c.detail) << "\n";
    if (artifact.is_object() && artifact.contains("table")) {
        const auto& table = artifact["table"];
        const auto& sizes = artifact["class_sizes"];
        os << "chi";
        for (size_t c = 0; c < sizes.size(); ++c) os << ",C" << c;
        os << "\n";
        for (size_t i = 0; i < table.size(); ++i) {
            os << "chi_" << i;
            for (const auto& cell : table[i]) os << "," << csv_quote(cell_from_json(cell));
            os << "\n";
        }
        os << "size";
        for (const auto& cell : sizes) os << "," << csv_quote(cell_from_json(cell));
        os << "\n";
    } else if (artifact.is_object()) {
        for (const auto& [key, value] : artifact.items())
            os << key << "," << csv_quote(value.dump()) << "\n";
    }
    os << "# exit," << exit_code << "\n";
    return os.str();
}

RunReport cmd_validate(const std::string& path, const std::string& kind, double tol) {
    RunReport r;
    r.command = "validate " + path + (kind == "auto" ? "" : " --kind " + kind);
    try {
        nlohmann::json j = load_json_file(path);
        const std::string k = kind == "auto" ? detect_kind(j) : kind;
        r.artifact = nlohmann::ordered_json::object();
        r.artifact["kind"] = k;
        if (k == "ring") {
            push_validation(r, validate_fusion_ring(fusion_ring_from_json(j), tol));
        } else if (k == "group") {
            try {
                check_cayley(cayley_from_json(j));
                push(r, "group_laws", true);
            } catch (const Error& e) {
                if (e.kind() != ErrKind::validation) throw;
                push(r, "group_laws", false, 0, e.what());
                r.exit_code = 1;
            }
        } else if (k == "hopf") {
            HopfAny h = hopf_from_json(j);
            std::visit([&](const auto& x) { push_validation(r, validate_hopf(x)); }, h);
        } else if (k == "modular") {
            ModularDatum m = modular_from_json(j);
            const int n = m.rank();
            bool sym = true;
            std::string detail;
            for (int i = 0; i < n && sym; ++i)
                for (int jj = 0; jj < i && sym; ++jj)
                    if (!Scalar::eq(m.s[i][jj], m.s[jj][i], tol)) {
                        sym = false;
                        detail = "s(" + std::to_string(i) + ", " + std::to_string(jj) +
                                 ") != s(" + std::to_string(jj) + ", " + std::to_string(i) + ")";
                    }
            push(r, "symmetric", sym, 0, detail);
            bool unit_row = true;
            std::string udetail;
            for (int jj = 0; jj < n && unit_row; ++jj)
                if (std::abs(m.s[0][jj].embed()) <= tol) {
                    unit_row = false;
                    udetail = "s(0, " + std::to_string(jj) + ") vanishes";
                }
            push(r, "unit_row", unit_row, 0, udetail);
            Eigen::MatrixXcd s(n, n);
            for (int i = 0; i < n; ++i)
                for (int jj = 0; jj < n; ++jj) s(i, jj) = m.s[i][jj].embed();
            double det = std::abs(s.determinant());
            push(r, "invertible", det > tol, det);
            if (!sym || !unit_row || det <= tol) r.exit_code = 1;
        } else {
            throw validation_error("unknown kind \"" + k + "\"");
        }
    } catch (const Error& e) {
        fail_with_error(r, e);
    }
    return r;
}

RunReport cmd_chartable(const std::string& path, double tol, std::uint64_t seed) {
    RunReport r;
    r.command = "chartable " + path;
    try {
        FusionRing f = fusion_ring_from_json(load_json_file(path));
        ValidationReport v = validate_fusion_ring(f, tol);
        push(r, "validate", v.ok, 0, first_fail(v));
        if (!v.ok) {
            r.exit_code = 1;
            return r;
        }

        bool comm = true;
        std::string where;
        for (int i = 0; i < f.rank && comm; ++i)
            for (int j = 0; j < i && comm; ++j)
                for (int k = 0; k < f.rank && comm; ++k)
                    if (f.n(i, j, k) != f.n(j, i, k)) {
                        comm = false;
                        where = "N(" + std::to_string(i) + ", " + std::to_string(j) + ", " +
                                std::to_string(k) + ") != N(" + std::to_string(j) + ", " +
                                std::to_string(i) + ", " + std::to_string(k) + ")";
                    }
        push(r, "commutativity", comm, 0, where);
        if (!comm) {
            r.exit_code = 2;
            return r;
        }

        CharacterTable t;
        try {
            t = compute_character_table(f, tol, seed);
        } catch (const Error& e) {
            push(r, "semisimplicity", false, 0, e.what());
            r.exit_code = 2;
            return r;
        }
        push(r, "semisimplicity", true);
        push(r, "table", true);

        auto cs = class_sizes(t, f);
        double cres = 0;
        for (int c = 0; c < t.rank(); ++c) cres = std::max(cres, std::abs(cs[c] - t.class_sizes[c]));
        push(r, "class_sizes", cres <= tol, cres);

        auto idem = idempotents(t, f);
        double ires = 0;
        for (int a = 0; a < t.rank(); ++a)
            for (int b = 0; b < t.rank(); ++b) {
                auto prod = cf_product(f, idem[a], idem[b]);
                for (int k = 0; k < t.rank(); ++k) {
                    Cplx target = a == b ? idem[a][k] : Cplx(0, 0);
                    ires = std::max(ires, std::abs(prod[k] - target));
                }
            }
        push(r, "idempotents", ires <= tol, ires);

        auto orep = verify_orthogonality(t, f, tol);
        double ores = std::max({orep.max_first, orep.max_second, orep.max_change_of_basis});
        std::string odetail;
        if (!orep.pass)
            odetail = "worst pair (" + std::to_string(orep.first_i) + ", " +
                      std::to_string(orep.first_j) + ")";
        push(r, "orthogonality", orep.pass, ores, odetail);

        auto irep = integrality_check(t, f, tol);
        push(r, "integrality", irep.pass, irep.max_residual,
             irep.notes.empty() ? "" : irep.notes.front());

        r.artifact = t.to_json();
        set_exit_from_checks(r);
    } catch (const Error& e) {
        fail_with_error(r, e);
    }
    return r;
}

RunReport cmd_modular_chartable(const std::string& path, double tol) {
    RunReport r;
    r.command = "modular chartable " + path;
    try {
        ModularDatum m = modular_from_json(load_json_file(path));
        CharacterTable t;
        try {
            t = smatrix_chartable(m, tol);
        } catch (const Error& e) {
            if (e.kind() == ErrKind::parse) throw;
            push(r, "table", false, 0, e.what());
            r.exit_code = code_for(e.kind());
            return r;
        }
        push(r, "table", true);
        r.artifact = t.to_json();
    } catch (const Error& e) {
        fail_with_error(r, e);
    }
    return r;
}

RunReport cmd_modular_crosscheck(const std::string& path, double tol) {
    RunReport r;
    r.command = "modular crosscheck " + path;
    try {
        ModularDatum m = modular_from_json(load_json_file(path));
        CrossCheckReport c = cross_check(m, tol);
        push(r, "column_match", c.pass, c.max_residual);
        QHomReport q = check_q_homomorphism(m, tol);
        std::string qdetail;
        if (!q.pass && q.arg_i >= 0)
            qdetail = "fails at (" + std::to_string(q.arg_i) + ", " + std::to_string(q.arg_j) + ")";
        if (!q.pass && !q.notes.empty()) qdetail = q.notes.front();
        push(r, "q_homomorphism", q.pass, q.max_residual, qdetail);
        r.artifact = nlohmann::ordered_json::object();
        r.artifact["permutation"] = c.permutation;
        set_exit_from_checks(r);
    } catch (const Error& e) {
        fail_with_error(r, e);
    }
    return r;
}

RunReport cmd_hopf_report(const std::string& path) {
    RunReport r;
    r.command = "hopf report " + path;
    try {
        HopfAny h = hopf_from_json(load_json_file(path));
        std::visit([&](const auto& x) { hopf_report_impl(r, x); }, h);
    } catch (const Error& e) {
        fail_with_error(r, e);
    }
    return r;
}

RunReport cmd_hopf_fourier(const std::string& path) {
    RunReport r;
    r.command = "hopf fourier " + path;
    try {
        HopfAny h = hopf_from_json(load_json_file(path));
        std::visit([&](const auto& x) { hopf_fourier_impl(r, x); }, h);
    } catch (const Error& e) {
        fail_with_error(r, e);
    }
    return r;
}

RunReport cmd_group_chartable(const std::string& path, const std::string& method, double tol,
                              std::uint64_t seed) {
    RunReport r;
    r.command = "group chartable --method " + method + " " + path;
    try {
        if (method != "burnside" && method != "repring")
            throw validation_error("unknown method \"" + method + "\"");
        CayleyTable c = cayley_from_json(load_json_file(path));
        try {
            check_cayley(c);
        } catch (const Error& e) {
            if (e.kind() != ErrKind::validation) throw;
            push(r, "group_laws", false, 0, e.what());
            r.exit_code = 1;
            return r;
        }
        push(r, "group_laws", true);
        CharacterTable t = burnside_chartable(c, tol, seed);
        if (method == "burnside") {
            push(r, "table", true);
            r.artifact = t.to_json();
        } else {
            double round_res = 0;
            FusionRing f = ring_from_character_table(t, round_res);
            push(r, "ring_synthesis", true, round_res);
            ValidationReport v = validate_fusion_ring(f, tol);
            push(r, "ring_axioms", v.ok, 0, first_fail(v));
            if (!v.ok) {
                r.exit_code = 2;
                return r;
            }
            CharacterTable t2 = compute_character_table(f, tol, seed);
            push(r, "table", true);
            r.artifact = t2.to_json();
        }
    } catch (const Error& e) {
        fail_with_error(r, e);
    }
    return r;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"character tables, integrals, and Fourier theory for fusion rings, modular "
                 "data, finite groups, and hopf algebras"};
    app.require_subcommand(1);

    std::string path, kind = "auto", out_fmt = "text", method = "burnside";
    double tol = 1e-9;
    std::uint64_t seed = 0;
    std::function<RunReport()> runner;

    auto add_common = [&](CLI::App* sub, bool with_seed) {
        sub->add_option("input", path, "input JSON file")->required();
        sub->add_option("--tol", tol, "numeric tolerance")->capture_default_str();
        sub->add_option("--out", out_fmt, "output format")
            ->check(CLI::IsMember({"text", "csv", "json"}))
            ->capture_default_str();
        if (with_seed) sub->add_option("--seed", seed, "random seed")->capture_default_str();
    };

    CLI::App* val = app.add_subcommand("validate", "check an input file against its axioms");
    add_common(val, false);
    val->add_option("--kind", kind, "input kind")
        ->check(CLI::IsMember({"auto", "ring", "modular", "group", "hopf"}))
        ->capture_default_str();
    val->callback([&] { runner = [&] { return cmd_validate(path, kind, tol); }; });

    CLI::App* ct = app.add_subcommand("chartable", "character table of a commutative fusion ring");
    add_common(ct, true);
    ct->callback([&] { runner = [&] { return cmd_chartable(path, tol, seed); }; });

    CLI::App* mod = app.add_subcommand("modular", "S-matrix commands");
    mod->require_subcommand(1);
    CLI::App* mct = mod->add_subcommand("chartable", "character table of S-matrix ratios");
    add_common(mct, false);
    mct->callback([&] { runner = [&] { return cmd_modular_chartable(path, tol); }; });
    CLI::App* mcc =
        mod->add_subcommand("crosscheck", "match the ratio table against the Verlinde ring");
    add_common(mcc, false);
    mcc->callback([&] { runner = [&] { return cmd_modular_crosscheck(path, tol); }; });

    CLI::App* hopf = app.add_subcommand("hopf", "hopf algebra commands");
    hopf->require_subcommand(1);
    CLI::App* hrep = hopf->add_subcommand("report", "axioms, spaces, and exact identities");
    add_common(hrep, false);
    hrep->callback([&] { runner = [&] { return cmd_hopf_report(path); }; });
    CLI::App* hf =
        hopf->add_subcommand("fourier", "normalized Fourier pair and center transforms");
    add_common(hf, false);
    hf->callback([&] { runner = [&] { return cmd_hopf_fourier(path); }; });

    CLI::App* grp = app.add_subcommand("group", "finite group commands");
    grp->require_subcommand(1);
    CLI::App* gct = grp->add_subcommand("chartable", "character table from a Cayley table");
    add_common(gct, true);
    gct->add_option("--method", method, "pipeline")
        ->check(CLI::IsMember({"burnside", "repring"}))
        ->capture_default_str();
    gct->callback([&] { runner = [&] { return cmd_group_chartable(path, method, tol, seed); }; });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 3;
    }
    if (!runner) return 3;

    RunReport rep;
    try {
        rep = runner();
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return code_for(e.kind());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    if (out_fmt == "json") out << rep.to_json().dump(2) << "\n";
    else if (out_fmt == "csv") out << rep.to_csv();
    else out << rep.to_text();
    return rep.exit_code;
}

} // namespace charta
