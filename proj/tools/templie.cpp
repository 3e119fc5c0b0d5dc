#include "CLI11.hpp"
#include "json.hpp"

#include "templie/caps.hpp"
#include "templie/gp.hpp"
#include "templie/intertwiner.hpp"
#include "templie/link.hpp"
#include "templie/spectral.hpp"
#include "templie/spin.hpp"
#include "templie/structure.hpp"

#include <complex>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::ordered_json;
using namespace templie;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

struct Ctx {
    std::string format = "pretty";
    bool no_timestamp = false;
    std::string output_path;
    double tol = 1e-7;
    std::ostringstream out;
};

std::string timestamp_utc() {
    std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    return buf;
}

void stamp(Ctx& ctx, ordered_json& doc) {
    if (!ctx.no_timestamp) doc["timestamp"] = timestamp_utc();
}

void flush_output(Ctx& ctx) {
    std::string text = ctx.out.str();
    std::fputs(text.c_str(), stdout);
    if (!ctx.output_path.empty()) {
        std::ofstream f(ctx.output_path);
        if (!f) throw std::invalid_argument("cannot open output file " + ctx.output_path);
        f << text;
    }
}

std::string dstr(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string cstr(std::complex<double> z) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
    return buf;
}

ordered_json poly_to_json(const Poly& p) {
    ordered_json arr = ordered_json::array();
    for (const Int& c : p.coeffs()) arr.push_back(c.str());
    return arr;
}

std::string link_pretty(const Link& w) {
    std::string s = "{";
    bool first = true;
    for (auto [i, j] : w.arcs1()) {
        if (!first) s += ",";
        first = false;
        s += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
    s += "}";
    if (w.d() > 0) s += " d=" + std::to_string(w.d());
    return s;
}

ordered_json link_to_json(const Link& w) {
    ordered_json arr = ordered_json::array();
    for (auto [i, j] : w.arcs1()) arr.push_back(ordered_json::array({i, j}));
    return arr;
}

int parse_int(const std::string& s, const char* what) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(what);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("expected an integer for ") + what);
    }
}

int parse_twice_s(const std::string& s) {
    double v = 0;
    try {
        std::size_t pos = 0;
        v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("s");
    } catch (const std::exception&) {
        throw std::invalid_argument("expected a (half-)integer spin for s");
    }
    long t = std::lround(2 * v);
    if (std::abs(2 * v - double(t)) > 1e-9)
        throw std::invalid_argument("s must be integer or half-integer");
    return int(t);
}

std::vector<double> parse_beta_grid(const std::string& s) {
    std::vector<double> out;
    if (s.find(':') != std::string::npos) {
        double lo = 0, hi = 0, step = 0;
        if (std::sscanf(s.c_str(), "%lf:%lf:%lf", &lo, &hi, &step) != 3 || step <= 0 || hi < lo)
            throw std::invalid_argument("beta range must be lo:hi:step with step > 0");
        for (double b = lo; b <= hi + step / 2; b += step) out.push_back(b);
        return out;
    }
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad beta value '" + item + "'");
        }
    }
    if (out.empty()) throw std::invalid_argument("empty beta list");
    return out;
}

QValue parse_q(const std::string& s) {
    std::complex<double> q;
    if (s == "i") {
        q = {0, 1};
    } else if (s == "-i") {
        q = {0, -1};
    } else if (!s.empty() && s.back() == 'i') {
        // a+bi with a nonempty real part
        std::string body = s.substr(0, s.size() - 1);
        std::size_t split = body.find_last_of("+-");
        if (split == std::string::npos || split == 0)
            throw std::invalid_argument("bad q value '" + s + "'");
        std::string im = body.substr(split);
        if (im == "+") im = "1";
        if (im == "-") im = "-1";
        q = {std::stod(body.substr(0, split)), std::stod(im)};
    } else {
        try {
            q = {std::stod(s), 0};
        } catch (const std::exception&) {
            throw std::invalid_argument("bad q value '" + s + "'");
        }
    }
    if (std::abs(q) < 1e-12) throw std::invalid_argument("q must be nonzero");
    std::complex<double> beta = q + 1.0 / q;
    if (std::abs(beta.imag()) > 1e-9)
        throw std::invalid_argument("q + 1/q must be real");
    return QValue{q, beta.real()};
}

void require_cap(int n, int cap, const char* what) {
    if (n > env_max_n(cap)) throw SizeCapError(std::string(what) + ": size above cap");
}

void check_link_params(int n, int d) {
    if (n < 1 || d < 0 || d > n || (n - d) % 2 != 0)
        throw std::invalid_argument("need 0 <= d <= n with n - d even");
}

// ---------------------------------------------------------------- basis ----

int cmd_basis(Ctx& ctx, bool links_mode, bool spins_mode, int a, const std::string& b) {
    if (links_mode == spins_mode)
        throw std::invalid_argument("choose exactly one of --links or --spins");
    ordered_json doc;
    doc["command"] = "basis";
    stamp(ctx, doc);
    if (links_mode) {
        int n = a, d = parse_int(b, "d");
        check_link_params(n, d);
        require_cap(n, 12, "basis");
        std::vector<Link> basis = enumerate_links(n, d);
        doc["kind"] = "links";
        doc["n"] = n;
        doc["d"] = d;
        ordered_json items = ordered_json::array();
        if (ctx.format == "csv") ctx.out << "index,link,numerator,denominator\n";
        for (std::size_t k = 0; k < basis.size(); ++k) {
            unsigned long long num = basis[k].dyadic_numerator();
            unsigned long long den = 1ull << n;
            while (num != 0 && num % 2 == 0) {
                num /= 2;
                den /= 2;
            }
            if (ctx.format == "pretty") {
                ctx.out << k + 1 << ". " << link_pretty(basis[k]) << "  " << num << "/" << den
                        << "\n";
            } else if (ctx.format == "csv") {
                ctx.out << k + 1 << ",\"" << link_pretty(basis[k]) << "\"," << num << "," << den
                        << "\n";
            } else {
                ordered_json item;
                item["index"] = k + 1;
                item["arcs"] = link_to_json(basis[k]);
                item["numerator"] = num;
                item["denominator"] = den;
                items.push_back(item);
            }
        }
        doc["links"] = items;
    } else {
        int L = a, twice_s = parse_twice_s(b);
        require_cap(L, 12, "basis");
        SpinSector sec = enumerate_sector(L, twice_s);
        doc["kind"] = "spins";
        doc["L"] = L;
        doc["twice_s"] = twice_s;
        ordered_json items = ordered_json::array();
        if (ctx.format == "csv") ctx.out << "index,state,mask\n";
        for (std::size_t k = 0; k < sec.states.size(); ++k) {
            std::string s = spin_string(sec.states[k], L);
            if (ctx.format == "pretty")
                ctx.out << k + 1 << ". |" << s << ">  mask=" << sec.states[k] << "\n";
            else if (ctx.format == "csv")
                ctx.out << k + 1 << "," << s << "," << sec.states[k] << "\n";
            else {
                ordered_json item;
                item["index"] = k + 1;
                item["state"] = s;
                item["mask"] = sec.states[k];
                items.push_back(item);
            }
        }
        doc["states"] = items;
    }
    if (ctx.format == "json") ctx.out << doc.dump(2) << "\n";
    return 0;
}

// --------------------------------------------------------------- matrix ----

struct MatrixDump {
    std::vector<std::string> rows, cols;
    const PolyMatrix* poly = nullptr;           // exact entries
    std::optional<Eigen::MatrixXd> real;        // evaluated entries
    std::optional<Eigen::MatrixXcd> cplx;       // complex entries
};

void emit_matrix(Ctx& ctx, ordered_json& doc, const MatrixDump& m) {
    doc["rows"] = m.rows;
    doc["cols"] = m.cols;
    auto entry_json = [&](std::size_t i, std::size_t j) -> ordered_json {
        if (m.poly) return poly_to_json(m.poly->at(i, j));
        if (m.real) return dstr((*m.real)(Eigen::Index(i), Eigen::Index(j)));
        return cstr((*m.cplx)(Eigen::Index(i), Eigen::Index(j)));
    };
    auto entry_text = [&](std::size_t i, std::size_t j) -> std::string {
        if (m.poly) return m.poly->at(i, j).str();
        if (m.real) return dstr((*m.real)(Eigen::Index(i), Eigen::Index(j)));
        return cstr((*m.cplx)(Eigen::Index(i), Eigen::Index(j)));
    };
    std::size_t nr = m.rows.size(), nc = m.cols.size();
    if (ctx.format == "json") {
        ordered_json entries = ordered_json::array();
        for (std::size_t i = 0; i < nr; ++i) {
            ordered_json row = ordered_json::array();
            for (std::size_t j = 0; j < nc; ++j) row.push_back(entry_json(i, j));
            entries.push_back(row);
        }
        doc["entries"] = entries;
        ctx.out << doc.dump(2) << "\n";
    } else if (ctx.format == "csv") {
        ctx.out << "row";
        for (const std::string& c : m.cols) ctx.out << ",\"" << c << "\"";
        ctx.out << "\n";
        for (std::size_t i = 0; i < nr; ++i) {
            ctx.out << "\"" << m.rows[i] << "\"";
            for (std::size_t j = 0; j < nc; ++j) ctx.out << ",\"" << entry_text(i, j) << "\"";
            ctx.out << "\n";
        }
    } else {
        for (std::size_t i = 0; i < nr; ++i) {
            ctx.out << m.rows[i] << " :";
            for (std::size_t j = 0; j < nc; ++j) ctx.out << "  " << entry_text(i, j);
            ctx.out << "\n";
        }
    }
}

std::vector<std::string> link_labels(const std::vector<Link>& basis) {
    std::vector<std::string> out;
    out.reserve(basis.size());
    for (const Link& w : basis) out.push_back(link_pretty(w));
    return out;
}

std::vector<std::string> spin_labels(const SpinSector& sec) {
    std::vector<std::string> out;
    out.reserve(sec.states.size());
    for (SpinState s : sec.states) out.push_back(spin_string(s, sec.L));
    return out;
}

std::vector<std::string> full_spin_labels(int L) {
    std::vector<std::string> out;
    for (SpinState s = 0; s < (SpinState(1) << L); ++s) out.push_back(spin_string(s, L));
    return out;
}

int cmd_matrix(Ctx& ctx, const std::string& kind, int p1, const std::string& p2,
               const std::string& q_str, const std::string& beta_str) {
    ordered_json doc;
    doc["command"] = "matrix";
    doc["kind"] = kind;
    stamp(ctx, doc);
    MatrixDump dump;
    PolyMatrix pm;
    Eigen::MatrixXd evm;
    Eigen::MatrixXcd cm;
    std::optional<double> beta;
    if (!beta_str.empty()) beta = std::stod(beta_str);

    auto finish_exact = [&](PolyMatrix&& m) {
        pm = std::move(m);
        if (beta) {
            evm = pm.eval(*beta);
            dump.real = evm;
            doc["beta"] = dstr(*beta);
        } else {
            dump.poly = &pm;
        }
    };

    if (kind == "loop" || kind == "S" || kind == "gram" || kind == "f") {
        if (p2.empty()) throw std::invalid_argument("matrix " + kind + " needs n and d");
        int n = p1, d = parse_int(p2, "d");
        check_link_params(n, d);
        require_cap(n, 12, "matrix");
        doc["n"] = n;
        doc["d"] = d;
        if (kind == "loop") {
            dump.rows = dump.cols = link_labels(enumerate_links(n, d));
            finish_exact(hamiltonian_matrix(n, d));
        } else if (kind == "gram") {
            dump.rows = dump.cols = link_labels(enumerate_links(n, d));
            finish_exact(gram_matrix(n, d));
        } else {
            IntertwinerSet set = f_matrix(n, d);
            if (kind == "f") {
                dump.rows = spin_labels(set.sector);
                dump.cols = link_labels(set.basis);
                finish_exact(std::move(set.f));
            } else {
                dump.rows = dump.cols = link_labels(set.basis);
                finish_exact(std::move(set.S));
            }
        }
    } else if (kind == "spin") {
        int L = p1;
        doc["L"] = L;
        if (p2.empty()) {
            require_cap(L, 10, "matrix spin");
            dump.rows = dump.cols = full_spin_labels(L);
            finish_exact(h_spin_matrix(L));
        } else {
            int twice_s = parse_twice_s(p2);
            require_cap(L, 12, "matrix spin");
            doc["twice_s"] = twice_s;
            SpinSector sec = enumerate_sector(L, twice_s);
            dump.rows = dump.cols = spin_labels(sec);
            finish_exact(h_spin_sector(sec));
        }
    } else if (kind == "xxz") {
        int n = p1;
        require_cap(n, 10, "matrix xxz");
        doc["n"] = n;
        QValue qv{};
        if (!q_str.empty())
            qv = parse_q(q_str);
        else if (beta)
            qv = q_from_beta(*beta);
        else
            throw std::invalid_argument("matrix xxz needs --q or --beta");
        doc["q"] = cstr(qv.q);
        doc["beta"] = dstr(qv.beta);
        cm = h_xxz_matrix(n, qv);
        dump.cplx = cm;
        dump.rows = dump.cols = full_spin_labels(n);
    } else {
        throw std::invalid_argument("unknown matrix kind '" + kind + "'");
    }
    emit_matrix(ctx, doc, dump);
    return 0;
}

// --------------------------------------------------------------- verify ----

struct VerifyRow {
    std::string suite, instance;
    bool ok = false;
    std::string detail;
};

void run_intertwine(int n_max, std::vector<VerifyRow>& rows) {
    for (int n = 2; n <= n_max; ++n)
        for (int d = n % 2; d <= n; d += 2) {
            IntertwineReport rep = verify_intertwining(n, d);
            VerifyRow row{"intertwine", "n=" + std::to_string(n) + " d=" + std::to_string(d),
                          rep.ok, ""};
            if (!rep.ok) {
                for (std::size_t i = 0; i < rep.residual.rows() && row.detail.empty(); ++i)
                    for (std::size_t j = 0; j < rep.residual.cols(); ++j)
                        if (!rep.residual.at(i, j).is_zero()) {
                            row.detail = "residual[" + std::to_string(i) + "][" +
                                         std::to_string(j) + "]=" + rep.residual.at(i, j).str();
                            break;
                        }
            }
            rows.push_back(std::move(row));
        }
}

void run_inject(int n_max, std::vector<VerifyRow>& rows) {
    for (int n = 2; n <= n_max; ++n)
        for (int d = n % 2; d <= n; d += 2) {
            PivotCertificate cert = verify_injectivity(n, d);
            rows.push_back({"inject", "n=" + std::to_string(n) + " d=" + std::to_string(d),
                            cert.ok, cert.failure});
        }
}

void run_pseudo(int n_max, std::optional<int> n1, std::optional<int> d1,
                std::vector<VerifyRow>& rows) {
    auto one = [&](int n, int d) {
        rows.push_back({"pseudo", "n=" + std::to_string(n) + " d=" + std::to_string(d),
                        check_pseudo_hermitian(n, d), ""});
    };
    if (n1 && d1) {
        check_link_params(*n1, *d1);
        one(*n1, *d1);
        return;
    }
    for (int n = 2; n <= n_max; ++n)
        for (int d = n % 2; d <= n; d += 2) one(n, d);
}

void run_gp(int n_max, std::vector<VerifyRow>& rows) {
    for (int n = 2; n <= n_max; n += 2) {
        rows.push_back({"gp", "consistency n=" + std::to_string(n), verify_gp_consistency(n), ""});
        for (int p = 0; 2 * p <= n - 2; ++p)
            rows.push_back({"gp", "identity n=" + std::to_string(n) + " p=" + std::to_string(p),
                            verify_gp_identity(n, p), ""});
    }
}

void run_suf(int p_max, int a_max, int b_max, std::vector<VerifyRow>& rows) {
    SufReport rep = verify_sufficient_conditions(p_max, a_max, b_max);
    std::string lim = "p<=" + std::to_string(p_max) + " a<=" + std::to_string(a_max) +
                      " b<=" + std::to_string(b_max);
    rows.push_back({"suf", "condition 1, " + lim, rep.suf1, ""});
    rows.push_back({"suf", "condition 2, " + lim, rep.suf2, ""});
    rows.push_back({"suf", "condition 3, " + lim, rep.suf3, ""});
}

void run_special(int n_max, std::vector<VerifyRow>& rows) {
    for (int n = 6; n <= n_max; n += 2)
        for (int p = 0; 2 * p <= n - 2; ++p) {
            SpecialFormsReport rep = special_link_formulas_check(n, p);
            int total = 0;
            std::string bad;
            for (int f = 0; f < 6; ++f) {
                total += rep.instances[f];
                if (!rep.ok[f]) bad += (bad.empty() ? "form " : ", ") + std::to_string(f + 1);
            }
            rows.push_back({"special",
                            "n=" + std::to_string(n) + " p=" + std::to_string(p) + " (" +
                                std::to_string(total) + " instances)",
                            rep.all_ok, bad});
        }
}

void run_gram_adjoint(int n_max, std::vector<VerifyRow>& rows) {
    for (int n = 2; n <= n_max; ++n)
        for (int d = n % 2; d <= n; d += 2) {
            PolyMatrix g = gram_matrix(n, d);
            bool ok = true;
            std::string detail;
            for (int i = 1; i < n && ok; ++i) {
                PolyMatrix e = representation_generator(n, d, i);
                if (!(g * e - e.transpose() * g).is_zero()) {
                    ok = false;
                    detail = "generator " + std::to_string(i);
                }
            }
            rows.push_back({"gram-adjoint", "n=" + std::to_string(n) + " d=" + std::to_string(d),
                            ok, detail});
        }
    for (int n = 2; n <= n_max; ++n) {
        PolyMatrix g = gram_matrix(n, n);
        bool ok = g.rows() == 1 && g.cols() == 1 && g.at(0, 0) == Poly(1);
        rows.push_back({"gram-adjoint", "det G(" + std::to_string(n) + "," + std::to_string(n) +
                            ")=1", ok, ""});
    }
}

int cmd_verify(Ctx& ctx, const std::string& suite, int n_max, std::optional<int> n1,
               std::optional<int> d1, int p_max, int a_max, int b_max) {
    if (n_max < 2) throw std::invalid_argument("--n-max must be at least 2");
    require_cap(n_max, 10, "verify");
    std::vector<VerifyRow> rows;
    if (suite == "intertwine" || suite == "all") run_intertwine(n_max, rows);
    else if (suite == "inject") run_inject(n_max, rows);
    else if (suite == "pseudo") run_pseudo(n_max, n1, d1, rows);
    else if (suite == "gp") run_gp(n_max, rows);
    else if (suite == "suf") run_suf(p_max, a_max, b_max, rows);
    else if (suite == "special") run_special(n_max, rows);
    else if (suite == "gram-adjoint") run_gram_adjoint(n_max, rows);
    else throw std::invalid_argument("unknown verify suite '" + suite + "'");
    if (suite == "all") {
        run_inject(n_max, rows);
        run_pseudo(n_max, std::nullopt, std::nullopt, rows);
        run_gp(n_max, rows);
        run_suf(p_max, a_max, b_max, rows);
        run_special(n_max, rows);
        run_gram_adjoint(n_max, rows);
    }
    bool all_ok = true;
    for (const VerifyRow& r : rows) all_ok = all_ok && r.ok;
    if (ctx.format == "json") {
        ordered_json doc;
        doc["command"] = "verify";
        doc["suite"] = suite;
        stamp(ctx, doc);
        ordered_json items = ordered_json::array();
        for (const VerifyRow& r : rows) {
            ordered_json item;
            item["suite"] = r.suite;
            item["instance"] = r.instance;
            item["ok"] = r.ok;
            if (!r.detail.empty()) item["detail"] = r.detail;
            items.push_back(item);
        }
        doc["checks"] = items;
        doc["all_ok"] = all_ok;
        ctx.out << doc.dump(2) << "\n";
    } else if (ctx.format == "csv") {
        ctx.out << "suite,instance,ok,detail\n";
        for (const VerifyRow& r : rows)
            ctx.out << r.suite << ",\"" << r.instance << "\"," << (r.ok ? "true" : "false")
                    << ",\"" << r.detail << "\"\n";
    } else {
        for (const VerifyRow& r : rows) {
            ctx.out << (r.ok ? "PASS" : "FAIL") << "  " << r.suite << "  " << r.instance;
            if (!r.detail.empty()) ctx.out << "  [" << r.detail << "]";
            ctx.out << "\n";
        }
        ctx.out << (all_ok ? "all checks passed" : "FAILURES present") << "\n";
    }
    return all_ok ? 0 : kExitFail;
}

// ------------------------------------------------------------- spectrum ----

const char* status_str(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        default: return "inconclusive";
    }
}

void emit_record(Ctx& ctx, ordered_json& rec) {
    if (ctx.format == "json") {
        ctx.out << rec.dump() << "\n";
    } else if (ctx.format == "csv") {
        ctx.out << rec.value("target", "") << ",\"" << rec.value("matrix", "") << "\","
                << rec.value("status", "") << ",\"" << rec.value("detail", "") << "\"\n";
    } else {
        ctx.out << rec.value("status", "") << "  " << rec.value("target", "") << "  "
                << rec.value("matrix", "");
        std::string d = rec.value("detail", "");
        if (!d.empty()) ctx.out << "  [" << d << "]";
        ctx.out << "\n";
    }
}

int cmd_spectrum(Ctx& ctx, const std::string& target, std::vector<int> loop_sel,
                 std::optional<int> xxz_sel, std::optional<int> spin_sel,
                 std::vector<int> s_sel, std::vector<int> gram_sel, const std::string& beta_str,
                 const std::string& q_str, std::optional<int> incl_n) {
    bool bad = false;      // verification failure seen
    bool undecided = false;  // inconclusive seen
    if (ctx.format == "csv") ctx.out << "target,matrix,status,detail\n";
    auto record = [&](ordered_json&& rec, CheckStatus st) {
        rec["status"] = status_str(st);
        if (!ctx.no_timestamp && ctx.format == "json") rec["timestamp"] = timestamp_utc();
        bad = bad || st == CheckStatus::Fail;
        undecided = undecided || st == CheckStatus::Inconclusive;
        emit_record(ctx, rec);
    };

    if (target == "reality") {
        if (!loop_sel.empty()) {
            int n = loop_sel.at(0), d = loop_sel.at(1);
            check_link_params(n, d);
            require_cap(n, 12, "spectrum");
            IntertwinerSet set = f_matrix(n, d);
            PolyMatrix h = hamiltonian_matrix(n, d);
            for (double b : parse_beta_grid(beta_str)) {
                std::string id = "H[" + std::to_string(n) + "," + std::to_string(d) +
                                 "] beta=" + dstr(b);
                SpectralReport rep = check_reality_similar(h, set.S, b, ctx.tol, id);
                ordered_json rec;
                rec["target"] = "reality";
                rec["matrix"] = rep.matrix_id;
                rec["max_imag"] = dstr(rep.max_imag);
                rec["tolerance"] = dstr(rep.tolerance);
                rec["diagonalisable"] = rep.diagonalisable;
                if (!rep.note.empty()) rec["detail"] = rep.note;
                record(std::move(rec), rep.status);
            }
        } else if (xxz_sel) {
            int n = *xxz_sel;
            require_cap(n, 10, "spectrum");
            std::vector<QValue> qs;
            if (!q_str.empty())
                qs.push_back(parse_q(q_str));
            else
                for (double b : parse_beta_grid(beta_str)) qs.push_back(q_from_beta(b));
            for (const QValue& qv : qs) {
                std::string id = "Hxxz[" + std::to_string(n) + "] q=" + cstr(qv.q);
                SpectralReport rep = check_reality(h_xxz_matrix(n, qv), ctx.tol, id);
                ordered_json rec;
                rec["target"] = "reality";
                rec["matrix"] = rep.matrix_id;
                rec["max_imag"] = dstr(rep.max_imag);
                rec["tolerance"] = dstr(rep.tolerance);
                rec["diagonalisable"] = rep.diagonalisable;
                if (!rep.note.empty()) rec["detail"] = rep.note;
                record(std::move(rec), rep.status);
            }
        } else if (spin_sel) {
            int L = *spin_sel;
            require_cap(L, 10, "spectrum");
            PolyMatrix h = h_spin_matrix(L);
            for (double b : parse_beta_grid(beta_str)) {
                std::string id = "Hherm[" + std::to_string(L) + "] beta=" + dstr(b);
                SpectralReport rep = check_reality(h.eval(b), ctx.tol, id);
                ordered_json rec;
                rec["target"] = "reality";
                rec["matrix"] = rep.matrix_id;
                rec["max_imag"] = dstr(rep.max_imag);
                rec["tolerance"] = dstr(rep.tolerance);
                if (!rep.note.empty()) rec["detail"] = rep.note;
                record(std::move(rec), rep.status);
            }
        } else {
            throw std::invalid_argument("spectrum reality needs --loop, --xxz, or --spin");
        }
    } else if (target == "positivity") {
        if (s_sel.empty()) throw std::invalid_argument("spectrum positivity needs --S n d");
        int n = s_sel.at(0), d = s_sel.at(1);
        check_link_params(n, d);
        require_cap(n, 12, "spectrum");
        PdReport rep = check_positive_definite(f_matrix(n, d).S, parse_beta_grid(beta_str),
                                               1e-12);
        ordered_json rec;
        rec["target"] = "positivity";
        rec["matrix"] = "S[" + std::to_string(n) + "," + std::to_string(d) + "]";
        rec["samples"] = int(rep.samples.size());
        if (rep.failure)
            rec["detail"] = "beta=" + dstr(rep.failure->beta) +
                            " min_pivot=" + dstr(rep.failure->pivot);
        record(std::move(rec), rep.ok ? CheckStatus::Pass : CheckStatus::Fail);
    } else if (target == "inclusion") {
        if (!incl_n) throw std::invalid_argument("spectrum inclusion needs --n");
        int n = *incl_n;
        for (double b : parse_beta_grid(beta_str)) {
            InclusionReport rep = spectral_inclusion(n, b, ctx.tol);
            ordered_json rec;
            rec["target"] = "inclusion";
            rec["matrix"] = "n=" + std::to_string(n) + " beta=" + dstr(b);
            rec["equality"] = rep.equality_ok;
            rec["inclusion"] = rep.inclusion_ok;
            rec["strict"] = rep.strict;
            if (!rep.note.empty()) rec["detail"] = rep.note;
            record(std::move(rec), rep.status);
        }
    } else if (target == "jordan") {
        Eigen::MatrixXcd m;
        std::string id;
        if (!loop_sel.empty()) {
            int n = loop_sel.at(0), d = loop_sel.at(1);
            check_link_params(n, d);
            require_cap(n, 12, "spectrum");
            double b = parse_beta_grid(beta_str).at(0);
            m = hamiltonian_matrix(n, d).eval(b).cast<std::complex<double>>();
            id = "H[" + std::to_string(n) + "," + std::to_string(d) + "] beta=" + dstr(b);
        } else if (xxz_sel) {
            int n = *xxz_sel;
            require_cap(n, 10, "spectrum");
            QValue qv = q_str.empty() ? q_from_beta(parse_beta_grid(beta_str).at(0))
                                      : parse_q(q_str);
            m = h_xxz_matrix(n, qv);
            id = "Hxxz[" + std::to_string(n) + "] q=" + cstr(qv.q);
        } else {
            throw std::invalid_argument("spectrum jordan needs --loop or --xxz");
        }
        JordanReport rep = jordan_detect(m, ctx.tol);
        ordered_json rec;
        rec["target"] = "jordan";
        rec["matrix"] = id;
        ordered_json blocks = ordered_json::array();
        for (const JordanCluster& c : rep.clusters) {
            if (c.geometric == c.algebraic) continue;
            ordered_json blk;
            blk["eigenvalue"] = cstr(c.eigenvalue);
            blk["algebraic"] = c.algebraic;
            blk["geometric"] = c.geometric;
            blocks.push_back(blk);
        }
        rec["defective"] = blocks;
        rec["any_defective"] = rep.any_defective;
        std::string detail = rep.note;
        for (const JordanCluster& c : rep.clusters)
            if (c.geometric < c.algebraic)
                detail += (detail.empty() ? "" : "; ") + std::string("eigenvalue ") +
                          cstr(c.eigenvalue) + " alg " + std::to_string(c.algebraic) + " geo " +
                          std::to_string(c.geometric);
        if (!detail.empty()) rec["detail"] = detail;
        record(std::move(rec), rep.status);
    } else if (target == "gram-scan") {
        if (gram_sel.empty()) throw std::invalid_argument("spectrum gram-scan needs --gram n d");
        int n = gram_sel.at(0), d = gram_sel.at(1);
        check_link_params(n, d);
        require_cap(n, 12, "spectrum");
        double lo = 0, hi = 0, step = 0;
        if (std::sscanf(beta_str.c_str(), "%lf:%lf:%lf", &lo, &hi, &step) != 3)
            throw std::invalid_argument("gram-scan needs --beta lo:hi:step");
        GramScanReport rep = gram_positivity_scan(n, d, lo, hi, step);
        ordered_json rec;
        rec["target"] = "gram-scan";
        rec["matrix"] = "G[" + std::to_string(n) + "," + std::to_string(d) + "]";
        ordered_json zeros = ordered_json::array();
        std::string detail = "det zeros:";
        for (double z : rep.det_zeros) {
            zeros.push_back(dstr(z));
            char buf[32];
            std::snprintf(buf, sizeof buf, " %.6g", z);
            detail += buf;
        }
        if (rep.det_zeros.empty()) detail += " none";
        rec["det_zeros"] = zeros;
        rec["positive_from"] = rep.positive_at_end ? dstr(rep.positive_from) : "never";
        if (rep.positive_at_end) {
            char buf[48];
            std::snprintf(buf, sizeof buf, "; positive from %.6g", rep.positive_from);
            detail += buf;
        }
        rec["detail"] = detail;
        record(std::move(rec), rep.positive_at_end ? CheckStatus::Pass : CheckStatus::Fail);
    } else {
        throw std::invalid_argument("unknown spectrum target '" + target + "'");
    }
    if (bad) return kExitFail;
    if (undecided) return kExitFail;
    return 0;
}

// ------------------------------------------------------------ decompose ----

int cmd_decompose(Ctx& ctx, int n, const std::string& s_str, const std::string& ell_str) {
    int twice_s = parse_twice_s(s_str);
    int ell = ell_str == "generic" ? kGenericEll : parse_int(ell_str, "ell");
    if (ell_str != "generic" && ell < 1) throw std::invalid_argument("ell must be >= 1");
    Decomposition dec = sector_decomposition(n, twice_s, ell);
    if (is_semisimple(n, ell)) require_cap(n, 12, "decompose generic audit");
    bool audit = dimension_audit(n, twice_s, ell);
    ordered_json doc;
    doc["command"] = "decompose";
    stamp(ctx, doc);
    doc["n"] = n;
    doc["twice_s"] = twice_s;
    doc["ell"] = ell_str == "generic" ? ordered_json("generic") : ordered_json(ell);
    ordered_json items = ordered_json::array();
    std::string prettyline;
    for (const DecompEntry& e : dec.entries) {
        ordered_json item;
        std::string label;
        long dim = 0;
        switch (e.kind) {
            case ModuleKind::Projective:
                label = "P(" + std::to_string(n) + "," + std::to_string(e.d) + ")";
                dim = link_dim(n, e.d_minus) + link_dim(n, e.d);
                item["kind"] = "projective";
                item["d_minus"] = e.d_minus;
                break;
            case ModuleKind::Standard:
                label = "V(" + std::to_string(n) + "," + std::to_string(e.d) + ")";
                dim = link_dim(n, e.d);
                item["kind"] = "standard";
                break;
            case ModuleKind::Irreducible:
                label = "I(" + std::to_string(n) + "," + std::to_string(e.d) + ")";
                dim = dim_irreducible_generic(n, e.d);
                item["kind"] = "irreducible";
                break;
        }
        item["d"] = e.d;
        item["dim"] = dim;
        items.push_back(item);
        prettyline += (prettyline.empty() ? "" : " + ") + label;
    }
    doc["entries"] = items;
    doc["audit"] = audit;
    doc["beta0_caveat"] = dec.beta0_caveat;
    if (ctx.format == "json") {
        ctx.out << doc.dump(2) << "\n";
    } else if (ctx.format == "csv") {
        ctx.out << "kind,d,d_minus,dim\n";
        for (const auto& item : items)
            ctx.out << item.value("kind", "") << "," << item["d"].get<int>() << ","
                    << (item.contains("d_minus") ? std::to_string(item["d_minus"].get<int>())
                                                 : std::string(""))
                    << "," << item["dim"].get<long>() << "\n";
    } else {
        ctx.out << prettyline << "\n";
        ctx.out << "audit: " << (audit ? "pass" : "FAIL") << "\n";
        if (dec.beta0_caveat)
            ctx.out << "note: ell=2 entries are reported without the standard/irreducible "
                       "identification at d=0\n";
    }
    return audit ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    Ctx ctx;
    CLI::App app{"Exact Temperley-Lieb engine: bases, matrices, identities, spectra"};
    app.require_subcommand(1);
    app.add_option("--format", ctx.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    app.add_flag("--no-timestamp", ctx.no_timestamp, "Suppress the timestamp field");
    app.add_option("--output", ctx.output_path, "Also write output to a file");
    app.add_option("--tol", ctx.tol, "Numeric tolerance for spectral checks");

    // basis
    auto* basis = app.add_subcommand("basis", "Ordered link or spin bases");
    bool links_mode = false, spins_mode = false;
    int basis_a = 0;
    std::string basis_b;
    basis->add_flag("--links", links_mode, "Link basis B_{n,d}");
    basis->add_flag("--spins", spins_mode, "Spin sector basis");
    basis->add_option("a", basis_a, "n (links) or L (spins)")->required();
    basis->add_option("b", basis_b, "d (links) or s (spins)")->required();

    // matrix
    auto* matrix = app.add_subcommand("matrix", "Matrix dumps, exact or evaluated");
    std::string mat_kind, mat_p2, mat_q, mat_beta;
    int mat_p1 = 0;
    matrix->add_option("kind", mat_kind, "loop|spin|xxz|f|S|gram")->required();
    matrix->add_option("p1", mat_p1, "n or L")->required();
    matrix->add_option("p2", mat_p2, "d or sector s");
    matrix->add_option("--q", mat_q, "q value, e.g. i or 0.5");
    matrix->add_option("--beta", mat_beta, "evaluate entries at beta");

    // verify
    auto* verify = app.add_subcommand("verify", "Exact identity suites");
    std::string suite;
    int n_max = 8, p_max = 6, a_max = 6, b_max = 6;
    int verify_n = -1, verify_d = -1;
    verify->add_option("suite", suite,
                       "intertwine|inject|pseudo|gp|suf|special|gram-adjoint|all")
        ->required();
    verify->add_option("--n-max", n_max, "Largest n in sweeps");
    verify->add_option("--n", verify_n, "Single instance n");
    verify->add_option("--d", verify_d, "Single instance d");
    verify->add_option("--p-max", p_max, "Sufficient-condition p range");
    verify->add_option("--a-max", a_max, "Sufficient-condition a range");
    verify->add_option("--b-max", b_max, "Sufficient-condition b range");

    // spectrum
    auto* spectrum = app.add_subcommand("spectrum", "Floating-point certifications");
    std::string target, spec_beta, spec_q;
    std::vector<int> loop_sel, s_sel, gram_sel;
    int xxz_n = -1, spin_L = -1, incl_n = -1;
    spectrum->add_option("target", target, "reality|positivity|inclusion|jordan|gram-scan")
        ->required();
    spectrum->add_option("--loop", loop_sel, "Standard-module Hamiltonian n d")->expected(2);
    spectrum->add_option("--xxz", xxz_n, "XXZ chain size n");
    spectrum->add_option("--spin", spin_L, "Hermitian chain length L");
    spectrum->add_option("--S", s_sel, "Intertwiner overlap matrix n d")->expected(2);
    spectrum->add_option("--gram", gram_sel, "Loop Gram matrix n d")->expected(2);
    spectrum->add_option("--beta", spec_beta, "Value, comma list, or lo:hi:step");
    spectrum->add_option("--q", spec_q, "q value, e.g. i");
    spectrum->add_option("--n", incl_n, "Chain size for inclusion");

    // decompose
    auto* decompose = app.add_subcommand("decompose", "Sector decomposition with audit");
    int dec_n = 0;
    std::string dec_s, dec_ell;
    decompose->add_option("n", dec_n, "Chain size")->required();
    decompose->add_option("s", dec_s, "Sector spin, may be half-integer")->required();
    decompose->add_option("ell", dec_ell, "Root-of-unity ell or 'generic'")->required();

    try {
        app.parse(argc, argv);
        int rc = 0;
        if (basis->parsed())
            rc = cmd_basis(ctx, links_mode, spins_mode, basis_a, basis_b);
        else if (matrix->parsed())
            rc = cmd_matrix(ctx, mat_kind, mat_p1, mat_p2, mat_q, mat_beta);
        else if (verify->parsed())
            rc = cmd_verify(ctx, suite, n_max,
                            verify_n >= 0 ? std::optional<int>(verify_n) : std::nullopt,
                            verify_d >= 0 ? std::optional<int>(verify_d) : std::nullopt, p_max,
                            a_max, b_max);
        else if (spectrum->parsed())
            rc = cmd_spectrum(ctx, target, loop_sel,
                              xxz_n >= 0 ? std::optional<int>(xxz_n) : std::nullopt,
                              spin_L >= 0 ? std::optional<int>(spin_L) : std::nullopt, s_sel,
                              gram_sel, spec_beta, spec_q,
                              incl_n >= 0 ? std::optional<int>(incl_n) : std::nullopt);
        else if (decompose->parsed())
            rc = cmd_decompose(ctx, dec_n, dec_s, dec_ell);
        flush_output(ctx);
        return rc;
    } catch (const CLI::ParseError& e) {
        int cli_rc = app.exit(e);
        return cli_rc == 0 ? 0 : kExitUsage;
    } catch (const SizeCapError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitCap;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitFail;
    }
}
