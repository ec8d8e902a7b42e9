#pragma once

#include "algebra_io.hpp"
#include "coadjoint.hpp"
#include "derivations.hpp"
#include "expr_parser.hpp"
#include "family.hpp"
#include "gradings.hpp"
#include "lie_algebra.hpp"
#include "linalg.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"
#include "repro.hpp"
#include "scalar.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cerrno>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace liekit::cli {

/// Exit codes: 0 success / verification passed, 1 mathematical failure
/// (Jacobi violated, not flat, not a grading, not characteristically
/// nilpotent, repro mismatch), 2 usage or input error.

namespace detail {

inline std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string digest_hex(const std::string& bytes) {
    std::ostringstream ss;
    ss << "0x" << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(bytes);
    return ss.str();
}

struct LoadedFile {
    std::string path;
    std::string bytes;
    AlgebraOrFamily content;
};

inline LoadedFile load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw AlgebraFileError("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    std::string bytes = ss.str();
    AlgebraOrFamily content = parse_algebra_file(bytes);
    return {path, std::move(bytes), std::move(content)};
}

inline const LieAlgebra& require_algebra(const LoadedFile& f) {
    if (const auto* g = std::get_if<LieAlgebra>(&f.content)) return *g;
    throw AlgebraFileError(f.path +
                           ": declares parameters; write a specialized file first "
                           "(for the built-in family: `lie-kit family gab --alpha … --beta … --out …`)");
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    return parts;
}

inline Vec parse_rational_csv(const std::string& csv, std::size_t want, const char* what) {
    auto parts = split(csv, ',');
    if (parts.size() != want)
        throw std::invalid_argument(std::string(what) + " needs " + std::to_string(want) +
                                    " comma-separated rationals, got " +
                                    std::to_string(parts.size()));
    Vec v(want);
    for (std::size_t i = 0; i < want; ++i) v[i] = parse_rational(parts[i]);
    return v;
}

inline std::string render_combo(const std::vector<std::string>& labels, const Vec& v) {
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (is_zero(v[i])) continue;
        const bool neg = v[i] < 0;
        const Scalar mag = neg ? Scalar(-v[i]) : v[i];
        std::string term = mag == 1 ? labels[i] : to_string(mag) + "*" + labels[i];
        if (first) {
            out += neg ? "-" : "";
            out += term;
            first = false;
        } else {
            out += neg ? " - " : " + ";
            out += term;
        }
    }
    return first ? "0" : out;
}

inline std::string render_subspace(const std::vector<std::string>& labels, const Subspace& s) {
    if (s.dim() == 0) return "0";
    bool coordinate = true;
    for (const auto& row : s.basis()) {
        std::size_t nonzero = 0;
        for (const auto& c : row)
            if (!is_zero(c)) ++nonzero;
        if (nonzero != 1) coordinate = false;
    }
    std::string out = "span{";
    for (std::size_t i = 0; i < s.basis().size(); ++i) {
        if (i) out += coordinate ? ", " : "; ";
        out += render_combo(labels, s.basis()[i]);
    }
    return out + "}";
}

inline nlohmann::ordered_json vec_to_json(const Vec& v) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const auto& c : v) a.push_back(to_string(c));
    return a;
}

inline nlohmann::ordered_json matrix_to_json(const Matrix& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline void print_matrix(std::ostream& out, const Matrix& m, const std::string& indent) {
    std::vector<std::size_t> width(m.cols(), 0);
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (std::size_t r = 0; r < m.rows(); ++r)
            width[c] = std::max(width[c], to_string(m.at(r, c)).size());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out << indent << "[";
        for (std::size_t c = 0; c < m.cols(); ++c)
            out << " " << std::setw(static_cast<int>(width[c])) << to_string(m.at(r, c));
        out << " ]\n";
    }
}

inline void emit(std::ostream& out, const nlohmann::ordered_json& j) { out << j.dump(2) << "\n"; }

template <typename R>
nlohmann::ordered_json residual_to_json(const std::vector<R>& residual) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const auto& c : residual) a.push_back(to_string(c));
    return a;
}

inline int check_jacobi_cmd(const LoadedFile& f, const std::vector<std::string>& params, bool json,
                            std::ostream& out) {
    nlohmann::ordered_json j;
    j["command"] = "check-jacobi";
    j["input"] = digest_hex(f.bytes);

    auto finish = [&](bool pass, const std::string& text_ok, const std::string& text_bad,
                      nlohmann::ordered_json violation) {
        j["pass"] = pass;
        j["violation"] = std::move(violation);
        if (json) {
            emit(out, j);
        } else {
            out << (pass ? text_ok : text_bad) << "\n";
        }
        return pass ? 0 : 1;
    };

    const auto* fam = std::get_if<LieFamily>(&f.content);
    if (fam && params.empty()) {
        j["mode"] = "symbolic";
        auto violation = fam->table().check_jacobi();
        nlohmann::ordered_json vj;
        std::string bad;
        if (violation) {
            vj["i"] = violation->i + 1;
            vj["j"] = violation->j + 1;
            vj["k"] = violation->k + 1;
            vj["residual"] = residual_to_json(violation->residual);
            bad = "jacobi: violated at (" + std::to_string(violation->i + 1) + "," +
                  std::to_string(violation->j + 1) + "," + std::to_string(violation->k + 1) + ")";
        }
        std::string params_note;
        for (const auto& p : fam->params()) params_note += (params_note.empty() ? "" : ", ") + p;
        return finish(!violation, "jacobi: ok (symbolic over " + params_note + ")", bad,
                      violation ? vj : nlohmann::ordered_json());
    }

    const LieAlgebra* g = std::get_if<LieAlgebra>(&f.content);
    LieAlgebra specialized;
    if (fam) {
        std::map<std::string, Scalar> assignment;
        nlohmann::ordered_json pj;
        for (const auto& p : params) {
            auto eq = p.find('=');
            if (eq == std::string::npos || eq == 0)
                throw std::invalid_argument("--param expects name=value, got \"" + p + "\"");
            std::string name = p.substr(0, eq);
            if (assignment.count(name))
                throw std::invalid_argument("duplicate --param " + name);
            assignment.emplace(name, parse_rational(p.substr(eq + 1)));
        }
        for (const auto& [name, value] : assignment) pj[name] = to_string(value);
        j["mode"] = "numeric";
        j["params"] = std::move(pj);
        specialized = fam->specialize(assignment);
        g = &specialized;
    } else {
        if (!params.empty())
            throw std::invalid_argument("--param given, but the file declares no parameters");
        j["mode"] = "numeric";
    }

    auto violation = g->check_jacobi();
    nlohmann::ordered_json vj;
    std::string bad;
    if (violation) {
        vj["i"] = violation->i + 1;
        vj["j"] = violation->j + 1;
        vj["k"] = violation->k + 1;
        vj["residual"] = residual_to_json(violation->residual);
        bad = "jacobi: violated at (" + std::to_string(violation->i + 1) + "," +
              std::to_string(violation->j + 1) + "," + std::to_string(violation->k + 1) +
              "), residual " + render_combo(g->labels(), violation->residual);
    }
    return finish(!violation, "jacobi: ok", bad, violation ? vj : nlohmann::ordered_json());
}

inline int invariants_cmd(const LoadedFile& f, bool json, std::ostream& out) {
    const LieAlgebra& g = require_algebra(f);
    InvariantReport rep = invariants(g);
    if (json) {
        nlohmann::ordered_json j;
        j["command"] = "invariants";
        j["input"] = digest_hex(f.bytes);
        j["dim"] = rep.dim;
        j["center_dim"] = rep.center_dim;
        j["lcs_dims"] = rep.lcs_dims;
        j["nilpotent"] = rep.nilpotent;
        if (rep.nilpotency_index)
            j["nilpotency_index"] = *rep.nilpotency_index;
        else
            j["nilpotency_index"] = nullptr;
        j["filiform"] = rep.filiform;
        emit(out, j);
        return 0;
    }
    out << "dim: " << rep.dim << "\n";
    out << "center dim: " << rep.center_dim << "\n";
    out << "lower central series:";
    for (auto d : rep.lcs_dims) out << " " << d;
    out << "\n";
    out << "nilpotent: " << (rep.nilpotent ? "true" : "false") << "\n";
    if (rep.nilpotency_index) out << "nilpotency index: " << *rep.nilpotency_index << "\n";
    out << "filiform: " << (rep.filiform ? "true" : "false") << "\n";
    return 0;
}

inline int derivations_cmd(const LoadedFile& f, bool print_basis, bool json, std::ostream& out) {
    const LieAlgebra& g = require_algebra(f);
    MatrixSpace der = derivation_space(g);
    if (json) {
        nlohmann::ordered_json j;
        j["command"] = "derivations";
        j["input"] = digest_hex(f.bytes);
        j["dim_der"] = der.dim();
        j["bracket_closed"] = der.bracket_closed;
        if (print_basis) {
            nlohmann::ordered_json basis = nlohmann::ordered_json::array();
            for (const auto& d : der.basis) basis.push_back(matrix_to_json(d));
            j["basis"] = std::move(basis);
        }
        emit(out, j);
        return 0;
    }
    out << "dim Der: " << der.dim() << "\n";
    if (print_basis) {
        for (std::size_t i = 0; i < der.basis.size(); ++i) {
            out << "D" << (i + 1) << ":\n";
            print_matrix(out, der.basis[i], "  ");
        }
    }
    return 0;
}

inline int char_nilpotent_cmd(const LoadedFile& f, std::uint64_t seed, bool json,
                              std::ostream& out) {
    const LieAlgebra& g = require_algebra(f);
    CharNilpotency res = is_characteristically_nilpotent(g, seed);
    if (json) {
        nlohmann::ordered_json j;
        j["command"] = "char-nilpotent";
        j["input"] = digest_hex(f.bytes);
        j["characteristically_nilpotent"] = res.characteristically_nilpotent;
        j["dim_der"] = res.der.dim();
        j["flag_dims"] = res.evidence.flag_dims;
        j["witness"] =
            res.evidence.witness ? matrix_to_json(*res.evidence.witness) : nlohmann::ordered_json();
        emit(out, j);
    } else {
        out << "characteristically nilpotent: "
            << (res.characteristically_nilpotent ? "true" : "false") << "\n";
        out << "dim Der: " << res.der.dim() << "\n";
        if (res.characteristically_nilpotent) {
            out << "common-kernel flag dims:";
            for (auto d : res.evidence.flag_dims) out << " " << d;
            out << "\n";
        } else if (res.evidence.witness) {
            out << "non-nilpotent derivation:\n";
            print_matrix(out, *res.evidence.witness, "  ");
        }
    }
    return res.characteristically_nilpotent ? 0 : 1;
}

inline Vec functional_from_flags(const LieAlgebra& g, bool have_csv, const std::string& csv,
                                 bool have_index, std::size_t index) {
    if (have_csv == have_index)
        throw std::invalid_argument("provide exactly one of --functional or --dual-basis-index");
    if (have_index) {
        if (index < 1 || index > g.dim())
            throw std::invalid_argument("--dual-basis-index out of range 1.." +
                                        std::to_string(g.dim()));
        return basis_vector(g.dim(), index - 1);
    }
    return parse_rational_csv(csv, g.dim(), "--functional");
}

inline int radical_cmd(const LoadedFile& f, const Vec& ell, bool json, std::ostream& out) {
    const LieAlgebra& g = require_algebra(f);
    Subspace rad = radical(g, ell);
    if (json) {
        nlohmann::ordered_json j;
        j["command"] = "radical";
        j["input"] = digest_hex(f.bytes);
        j["functional"] = vec_to_json(ell);
        j["radical_dim"] = rad.dim();
        nlohmann::ordered_json basis = nlohmann::ordered_json::array();
        for (const auto& row : rad.basis()) basis.push_back(vec_to_json(row));
        j["basis"] = std::move(basis);
        j["span"] = render_subspace(g.labels(), rad);
        emit(out, j);
        return 0;
    }
    out << "radical dim: " << rad.dim() << "\n";
    out << "radical: " << render_subspace(g.labels(), rad) << "\n";
    return 0;
}

inline int flat_orbit_cmd(const LoadedFile& f, const Vec& ell, bool json, std::ostream& out) {
    const LieAlgebra& g = require_algebra(f);
    Subspace rad = radical(g, ell);
    Subspace z = center(g);
    const bool flat = rad == z;
    if (json) {
        nlohmann::ordered_json j;
        j["command"] = "flat-orbit";
        j["input"] = digest_hex(f.bytes);
        j["functional"] = vec_to_json(ell);
        j["flat_orbit"] = flat;
        j["radical_dim"] = rad.dim();
        j["center_dim"] = z.dim();
        emit(out, j);
    } else {
        out << "flat orbit: " << (flat ? "true" : "false") << "\n";
        out << "radical dim: " << rad.dim() << "\n";
        out << "center dim: " << z.dim() << "\n";
    }
    return flat ? 0 : 1;
}

inline std::vector<std::string> dual_labels(const LieAlgebra& g) {
    std::vector<std::string> labels;
    labels.reserve(g.dim());
    for (const auto& l : g.labels()) labels.push_back(l + "*");
    return labels;
}

inline int index_cmd(const LoadedFile& f, std::size_t samples, std::uint64_t seed, bool json,
                     std::ostream& out) {
    const LieAlgebra& g = require_algebra(f);
    GenericIndexResult res = generic_index(g, samples, seed);
    if (json) {
        nlohmann::ordered_json j;
        j["command"] = "index";
        j["input"] = digest_hex(f.bytes);
        j["samples"] = res.samples;
        j["seed"] = res.seed;
        j["min_radical_dim"] = res.min_radical_dim;
        j["witness_functional"] = vec_to_json(res.witness);
        emit(out, j);
        return 0;
    }
    out << "index (sampled upper bound): " << res.min_radical_dim << "\n";
    out << "samples: " << res.samples << "\n";
    out << "seed: " << res.seed << "\n";
    out << "witness functional: " << render_combo(dual_labels(g), res.witness) << "\n";
    return 0;
}

inline int grading_verify_cmd(const LoadedFile& f, const std::string& weights_csv, bool json,
                              std::ostream& out) {
    const LieAlgebra& g = require_algebra(f);
    Vec w = parse_rational_csv(weights_csv, g.dim(), "--weights");
    auto violation = verify_grading(g, w);
    if (json) {
        nlohmann::ordered_json j;
        j["command"] = "grading-verify";
        j["input"] = digest_hex(f.bytes);
        j["weights"] = vec_to_json(w);
        j["pass"] = !violation;
        if (violation) {
            nlohmann::ordered_json vj;
            vj["i"] = violation->i + 1;
            vj["j"] = violation->j + 1;
            vj["k"] = violation->k + 1;
            j["violation"] = std::move(vj);
        } else {
            j["violation"] = nullptr;
        }
        emit(out, j);
    } else if (!violation) {
        out << "grading: ok\n";
    } else {
        out << "not a grading: w" << (violation->i + 1) << " + w" << (violation->j + 1)
            << " != w" << (violation->k + 1) << " on a nonzero structure constant\n";
    }
    return violation ? 1 : 0;
}

inline int grading_search_cmd(const LoadedFile& f, bool json, std::ostream& out) {
    const LieAlgebra& g = require_algebra(f);
    auto w = search_positive_diagonal_grading(g);
    if (json) {
        nlohmann::ordered_json j;
        j["command"] = "grading-search";
        j["input"] = digest_hex(f.bytes);
        j["found"] = w.has_value();
        if (w) {
            nlohmann::ordered_json wj = nlohmann::ordered_json::array();
            for (const auto& x : *w) wj.push_back(x.get_str());
            j["weights"] = std::move(wj);
        } else {
            j["weights"] = nullptr;
        }
        emit(out, j);
        return 0;
    }
    if (w) {
        out << "positive grading: found\nweights:";
        for (const auto& x : *w) out << " " << x.get_str();
        out << "\n";
    } else {
        out << "positive grading: none found in this basis\n";
    }
    return 0;
}

inline int dilation_status_cmd(const LoadedFile& f, std::uint64_t seed, bool json,
                               std::ostream& out) {
    const LieAlgebra& g = require_algebra(f);
    DilationStatus st = dilation_status(g, nullptr, seed);
    if (json) {
        nlohmann::ordered_json j;
        j["command"] = "dilation-status";
        j["input"] = digest_hex(f.bytes);
        j["kind"] = to_string(st.kind);
        j["reason"] = to_string(st.reason);
        nlohmann::ordered_json wj = nlohmann::ordered_json::array();
        for (const auto& x : st.weights) wj.push_back(x.get_str());
        j["weights"] = std::move(wj);
        j["note"] = st.note;
        emit(out, j);
        return 0;
    }
    out << "dilation status: " << to_string(st.kind) << "\n";
    if (st.kind == DilationStatus::Kind::NoDilations)
        out << "reason: " << to_string(st.reason) << "\n";
    if (st.kind == DilationStatus::Kind::Dilations) {
        out << "weights:";
        for (const auto& x : st.weights) out << " " << x.get_str();
        out << "\n";
    }
    if (!st.note.empty()) out << "note: " << st.note << "\n";
    return 0;
}

inline int family_gab_cmd(const std::string& alpha, const std::string& beta, bool take_quotient,
                          const std::string& out_path, bool json, std::ostream& out) {
    Scalar a = parse_rational(alpha);
    Scalar b = parse_rational(beta);
    LieAlgebra g = take_quotient ? gab_quotient(a, b) : gab(a, b);
    std::string rendered = render_algebra(g);
    if (out_path.empty()) {
        out << rendered;
        return 0;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot write file: " + out_path);
    file << rendered;
    file.close();
    if (json) {
        nlohmann::ordered_json j;
        j["command"] = "family-gab";
        j["alpha"] = to_string(a);
        j["beta"] = to_string(b);
        j["quotient"] = take_quotient;
        j["wrote"] = out_path;
        emit(out, j);
    } else {
        out << "wrote " << out_path << "\n";
    }
    return 0;
}

inline const ReproCheck* find_check(const ReproPoint& pt, const std::string& name) {
    for (const auto& c : pt.checks)
        if (c.name == name) return &c;
    return nullptr;
}

inline int repro_cmd(const std::vector<std::pair<Scalar, Scalar>>& grid, std::uint64_t seed,
                     bool json, std::ostream& out) {
    ReproReport rep = run_repro(grid, seed);
    if (json) {
        emit(out, repro_to_json(rep));
        return rep.pass ? 0 : 1;
    }
    auto cell = [](const ReproCheck* c) { return c ? c->actual : std::string("-"); };
    out << std::left << std::setw(7) << "alpha" << std::setw(7) << "beta" << std::setw(8)
        << "Der(g)" << std::setw(6) << "nilp" << std::setw(10) << "Der(g/z)" << std::setw(6)
        << "nilp" << std::setw(46) << "quotient dilations" << "point\n";
    std::size_t checks = 0;
    for (const auto& pt : rep.points) {
        for (const auto& c : pt.checks) (void)c, ++checks;
        out << std::left << std::setw(7) << to_string(pt.alpha) << std::setw(7)
            << to_string(pt.beta) << std::setw(8) << cell(find_check(pt, "dim-der"))
            << std::setw(6) << cell(find_check(pt, "der-all-nilpotent")) << std::setw(10)
            << cell(find_check(pt, "dim-der-quotient")) << std::setw(6)
            << cell(find_check(pt, "der-quotient-all-nilpotent")) << std::setw(46)
            << cell(find_check(pt, "quotient-dilation-status"))
            << (pt.pass ? "pass" : "FAIL") << "\n";
        if (!pt.pass)
            for (const auto& c : pt.checks)
                if (c.asserted && !c.pass)
                    out << "  failed " << c.name << ": expected " << c.expected << ", got "
                        << c.actual << "\n";
    }
    for (const auto& c : rep.reference_checks) {
        ++checks;
        out << "reference " << c.name << ": " << (c.pass ? "pass" : "FAIL") << " (" << c.actual
            << ")\n";
        if (!c.pass) out << "  expected " << c.expected << "\n";
    }
    out << "overall: " << (rep.pass ? "pass" : "FAIL") << " (" << rep.points.size()
        << " points, " << checks << " checks, seed " << rep.seed << ")\n";
    return rep.pass ? 0 : 1;
}

}  // namespace detail

/// Run the command-line driver on the given arguments (program name
/// excluded), writing to the given streams. Returns the process exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::uint64_t default_seed = kDefaultSeed;
    if (const char* env = std::getenv("LIE_KIT_SEED")) {
        std::string s(env);
        char* end = nullptr;
        errno = 0;
        unsigned long long v = std::strtoull(s.c_str(), &end, 10);
        if (s.empty() || end != s.c_str() + s.size() || errno != 0) {
            err << "error: invalid LIE_KIT_SEED value: \"" << s << "\"\n";
            return 2;
        }
        default_seed = v;
    }

    CLI::App app{"Exact structural invariants of finite-dimensional Lie algebras over Q"};
    app.name("lie-kit");
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* check = app.add_subcommand("check", "verification checks");
    check->fallthrough();
    check->require_subcommand(1);
    std::string jac_file;
    std::vector<std::string> jac_params;
    auto* jacobi = check->add_subcommand(
        "jacobi", "verify the Jacobi identity (symbolically for parametric files)");
    jacobi->fallthrough();
    jacobi->add_option("file", jac_file, "algebra file")->required();
    jacobi->add_option("--param", jac_params,
                       "parameter assignment name=value (repeatable; specializes the family)");

    std::string inv_file;
    auto* inv = app.add_subcommand("invariants",
                                   "dimension, center, lower central series, nilpotency");
    inv->fallthrough();
    inv->add_option("file", inv_file, "algebra file")->required();

    std::string der_file;
    bool der_print = false;
    auto* der = app.add_subcommand("derivations", "derivation algebra Der(g)");
    der->fallthrough();
    der->add_option("file", der_file, "algebra file")->required();
    der->add_flag("--print-basis", der_print, "print a basis of Der(g)");

    std::string cn_file;
    auto* cn = app.add_subcommand("char-nilpotent",
                                  "decide whether every derivation is nilpotent");
    cn->fallthrough();
    cn->add_option("file", cn_file, "algebra file")->required();

    std::string rad_file, rad_functional;
    std::size_t rad_index = 0;
    auto* rad = app.add_subcommand("radical", "radical of the skew form B_ell");
    rad->fallthrough();
    rad->add_option("file", rad_file, "algebra file")->required();
    auto* rad_fo = rad->add_option("--functional", rad_functional,
                                   "comma-separated rational coordinates of ell");
    auto* rad_ix = rad->add_option("--dual-basis-index", rad_index, "k for ell = e_k^*");
    rad_fo->excludes(rad_ix);
    rad_ix->excludes(rad_fo);

    std::string fo_file, fo_functional;
    std::size_t fo_index = 0;
    auto* fo = app.add_subcommand("flat-orbit", "test radical(ell) == center");
    fo->fallthrough();
    fo->add_option("file", fo_file, "algebra file")->required();
    auto* fo_fo = fo->add_option("--functional", fo_functional,
                                 "comma-separated rational coordinates of ell");
    auto* fo_ix = fo->add_option("--dual-basis-index", fo_index, "k for ell = e_k^*");
    fo_fo->excludes(fo_ix);
    fo_ix->excludes(fo_fo);

    std::string idx_file;
    std::size_t idx_samples = 100;
    std::uint64_t idx_seed = default_seed;
    auto* idx = app.add_subcommand("index", "sampled upper bound for the index");
    idx->fallthrough();
    idx->add_option("file", idx_file, "algebra file")->required();
    idx->add_option("--samples", idx_samples, "number of random functionals (default 100)");
    idx->add_option("--seed", idx_seed, "random seed (default LIE_KIT_SEED or 1729)");

    auto* grading = app.add_subcommand("grading", "diagonal gradings in the given basis");
    grading->fallthrough();
    grading->require_subcommand(1);
    std::string gv_file, gv_weights;
    auto* gv = grading->add_subcommand("verify", "check that given weights grade the algebra");
    gv->fallthrough();
    gv->add_option("file", gv_file, "algebra file")->required();
    gv->add_option("--weights", gv_weights, "comma-separated rational weights")->required();
    std::string gs_file;
    auto* gs = grading->add_subcommand("search",
                                       "search for strictly positive diagonal grading weights");
    gs->fallthrough();
    gs->add_option("file", gs_file, "algebra file")->required();

    std::string ds_file;
    auto* ds = app.add_subcommand("dilation-status",
                                  "dilations / no-dilations / unknown for a nilpotent algebra");
    ds->fallthrough();
    ds->add_option("file", ds_file, "algebra file")->required();

    auto* family = app.add_subcommand("family", "built-in parametric families");
    family->fallthrough();
    family->require_subcommand(1);
    std::string fg_alpha, fg_beta, fg_out;
    bool fg_quotient = false;
    auto* fg = family->add_subcommand("gab", "the two-parameter filiform family g(alpha,beta)");
    fg->fallthrough();
    fg->add_option("--alpha", fg_alpha, "rational value (use --alpha=-1/2 for negatives)")
        ->required();
    fg->add_option("--beta", fg_beta, "rational value")->required();
    fg->add_flag("--quotient", fg_quotient, "emit the central quotient g/z instead");
    fg->add_option("--out", fg_out, "write to a file instead of stdout");

    auto* repro = app.add_subcommand("repro", "reproduction suites");
    repro->fallthrough();
    repro->require_subcommand(1);
    std::vector<std::string> rp_grid;
    std::uint64_t rp_seed = default_seed;
    auto* rp = repro->add_subcommand(
        "paper", "re-derive the documented g(alpha,beta) results over a parameter grid");
    rp->fallthrough();
    rp->add_option("--grid", rp_grid, "grid point alpha,beta (repeatable; default full grid)");
    rp->add_option("--seed", rp_seed, "random seed (default LIE_KIT_SEED or 1729)");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("lie-kit");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    const bool json = format == "json";
    try {
        if (*jacobi) return detail::check_jacobi_cmd(detail::load_file(jac_file), jac_params, json, out);
        if (*inv) return detail::invariants_cmd(detail::load_file(inv_file), json, out);
        if (*der) return detail::derivations_cmd(detail::load_file(der_file), der_print, json, out);
        if (*cn) return detail::char_nilpotent_cmd(detail::load_file(cn_file), default_seed, json, out);
        if (*rad) {
            auto f = detail::load_file(rad_file);
            Vec ell = detail::functional_from_flags(detail::require_algebra(f), rad_fo->count() > 0,
                                                    rad_functional, rad_ix->count() > 0, rad_index);
            return detail::radical_cmd(f, ell, json, out);
        }
        if (*fo) {
            auto f = detail::load_file(fo_file);
            Vec ell = detail::functional_from_flags(detail::require_algebra(f), fo_fo->count() > 0,
                                                    fo_functional, fo_ix->count() > 0, fo_index);
            return detail::flat_orbit_cmd(f, ell, json, out);
        }
        if (*idx)
            return detail::index_cmd(detail::load_file(idx_file), idx_samples, idx_seed, json, out);
        if (*gv) return detail::grading_verify_cmd(detail::load_file(gv_file), gv_weights, json, out);
        if (*gs) return detail::grading_search_cmd(detail::load_file(gs_file), json, out);
        if (*ds)
            return detail::dilation_status_cmd(detail::load_file(ds_file), default_seed, json, out);
        if (*fg) return detail::family_gab_cmd(fg_alpha, fg_beta, fg_quotient, fg_out, json, out);
        if (*rp) {
            std::vector<std::pair<Scalar, Scalar>> grid;
            if (rp_grid.empty()) {
                grid = default_grid();
            } else {
                for (const auto& point : rp_grid) {
                    auto parts = detail::split(point, ',');
                    if (parts.size() != 2)
                        throw std::invalid_argument("--grid expects alpha,beta; got \"" + point +
                                                    "\"");
                    grid.emplace_back(parse_rational(parts[0]), parse_rational(parts[1]));
                }
            }
            return detail::repro_cmd(grid, rp_seed, json, out);
        }
        err << "no command selected\n";
        return 2;
    } catch (const AlgebraFileError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ExprError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace liekit::cli
