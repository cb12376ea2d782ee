// convex_count: production matrices, counts, characteristic polynomials,
// eigenpairs and verification suites for plane graph classes on convex point sets.

#include "convex_count/cli.hpp"
#include "convex_count/oracle.hpp"
#include "convex_count/production.hpp"
#include "convex_count/spectral.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace convex_count;
using production::GraphClass;
using production::GraphClassSpec;

constexpr int kCountsGuard = 64;
constexpr int kDeterminantGuard = 8;
constexpr int kEigenGuard = 40;

struct Common {
  std::string cls;
  int n = -1;
  int k = 3;
  int r = -1;
  std::string format = "table";
  bool bfile = false;
  bool force = false;
  std::string sequence = "connected";
  std::string c_list;
};

void add_class_options(CLI::App* cmd, Common& o) {
  cmd->add_option("class", o.cls, "kangulation | geometric | connected | partition | relation")->required();
  cmd->add_option("--k", o.k, "face size for k-angulations")->check(CLI::Range(3, 64));
  cmd->add_option("--sequence", o.sequence, "relation input: connected | trees | paths");
  cmd->add_option("--c", o.c_list, "relation input as an explicit list c_2,c_3,...");
  cmd->add_option("--format", o.format, "table | csv | json")->check(CLI::IsMember({"table", "csv", "json"}));
  cmd->add_flag("--force", o.force, "lift size guards");
}

// Relation input long enough to cover c_2 .. c_last.
GraphClassSpec make_spec(const Common& o, int last) {
  const GraphClass cls = production::parse_graph_class(o.cls);
  switch (cls) {
    case GraphClass::KAngulation: return GraphClassSpec::k_angulation(o.k);
    case GraphClass::Geometric: return GraphClassSpec::geometric();
    case GraphClass::Connected: return GraphClassSpec::connected();
    case GraphClass::NonCrossingPartition: return GraphClassSpec::partition();
    case GraphClass::RelationMatrix: {
      auto c = o.c_list.empty() ? cli::relation_sequence(o.sequence, last, o.force) : cli::parse_sequence_list(o.c_list);
      return GraphClassSpec::relation(std::move(c));
    }
  }
  throw std::logic_error("unhandled class");
}

// Matrix size: --r for k-angulations, --n otherwise.
int matrix_size(const Common& o, GraphClass cls) {
  const int size = cls == GraphClass::KAngulation && o.r >= 0 ? o.r : o.n;
  if (size < 0) throw CLI::ValidationError(cls == GraphClass::KAngulation ? "--r (or --n) is required" : "--n is required");
  return size;
}

cli::OutputRecord base_record(const std::string& command, const Common& o, const GraphClassSpec& spec) {
  cli::OutputRecord rec;
  rec.command = command;
  rec.cls = production::to_string(spec.cls);
  if (spec.cls == GraphClass::KAngulation) rec.parameters["k"] = spec.k;
  if (spec.cls == GraphClass::RelationMatrix) {
    rec.parameters["c"] = cli::big_array(spec.relation_sequence);
    if (o.c_list.empty()) rec.parameters["sequence"] = o.sequence;
  }
  return rec;
}

int run_matrix(const Common& o) {
  const GraphClass cls = production::parse_graph_class(o.cls);
  const int size = matrix_size(o, cls);
  if (size < 1) throw CLI::ValidationError("matrix size must be at least 1");
  const auto spec = make_spec(o, size);
  auto rec = base_record("matrix", o, spec);
  rec.parameters["n"] = size;
  rec.payload = cli::matrix_payload(production::build_matrix(spec, size));
  std::cout << cli::render_matrix(rec, cli::parse_format(o.format));
  return 0;
}

int run_counts(const Common& o, int n_max) {
  const auto spec = make_spec(o, n_max + 2);
  if (n_max > kCountsGuard && !o.force) {
    throw oracle::GuardExceeded("--n-max above " + std::to_string(kCountsGuard) + " needs --force");
  }
  auto rec = base_record("counts", o, spec);
  rec.parameters["n_max"] = n_max;
  rec.payload = cli::counts_payload(production::count_sequence(spec, n_max));
  std::cout << cli::render_counts(rec, o.bfile ? cli::Format::Bfile : cli::parse_format(o.format));
  return 0;
}

int run_charpoly(const Common& o, const std::string& method) {
  const GraphClass cls = production::parse_graph_class(o.cls);
  const int n = matrix_size(o, cls);
  const auto spec = make_spec(o, std::max(n, 2));
  IntPolynomial p = IntPolynomial::constant(1);
  if (n > 0) {
    if (method == "recurrence") {
      p = spectral::charpoly_recurrence(production::build_matrix(spec, n), n)[n];
    } else if (method == "determinant") {
      if (n > kDeterminantGuard && !o.force) {
        throw oracle::GuardExceeded("determinant method is capped at n = " + std::to_string(kDeterminantGuard) +
                                    " (pass --force to override)");
      }
      p = poly_determinant_charpoly(production::build_matrix(spec, n));
    } else {
      switch (cls) {
        case GraphClass::KAngulation: p = spectral::charpoly_closed_kangulation(o.k, n); break;
        case GraphClass::Geometric: p = spectral::charpoly_closed_geometric(n); break;
        case GraphClass::Connected: p = spectral::charpoly_closed_connected(n); break;
        case GraphClass::NonCrossingPartition: p = spectral::charpoly_closed_partition(n); break;
        case GraphClass::RelationMatrix:
          throw CLI::ValidationError("the relation class has no closed form; use --method recurrence or determinant");
      }
    }
  }
  auto rec = base_record("charpoly", o, spec);
  rec.parameters["n"] = n;
  rec.parameters["method"] = method;
  rec.payload = cli::polynomial_payload(p);
  std::cout << cli::render_charpoly(rec, cli::parse_format(o.format));
  return 0;
}

int run_eigen(const Common& o, const std::string& tol_text, int digits) {
  const GraphClass cls = production::parse_graph_class(o.cls);
  const int n = matrix_size(o, cls);
  if (n < 1) throw CLI::ValidationError("matrix size must be at least 1");
  if (n > kEigenGuard && !o.force) {
    throw oracle::GuardExceeded("eigen is capped at n = " + std::to_string(kEigenGuard) + " (pass --force to override)");
  }
  const auto spec = make_spec(o, std::max(n, 2));
  const unsigned bits = spectral::precision_bits_from_env();
  spectral::PrecisionScope scope(bits);
  const spectral::Real tol(tol_text);
  if (!(tol > 0)) throw CLI::ValidationError("--tol must be positive");
  const auto m = production::build_matrix(spec, n);
  const auto dom = spectral::dominant_eigenvalue(m, tol);
  const auto pair = spectral::eigenvector_from_charpoly(m, dom.value);

  auto rec = base_record("eigen", o, spec);
  rec.parameters["n"] = n;
  rec.parameters["precision_bits"] = bits;
  rec.parameters["tol"] = tol_text;
  rec.payload["dominant_eigenvalue"] = dom.value.str(digits);
  rec.payload["real_root_count"] = dom.real_root_count;
  nlohmann::ordered_json vec = nlohmann::ordered_json::array();
  for (const auto& x : pair.vector) vec.push_back(x.str(digits));
  rec.payload["vector"] = vec;
  rec.payload["residual"] = pair.residual.str(6, std::ios_base::scientific);
  std::cout << cli::render_eigen(rec, cli::parse_format(o.format));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Production matrices and exact counts for plane graphs on convex point sets"};
  app.require_subcommand(1);

  Common o;
  int n_max = -1;
  std::string method = "recurrence";
  std::string tol = "1e-40";
  int digits = 40;

  auto* matrix = app.add_subcommand("matrix", "print a production matrix");
  add_class_options(matrix, o);
  matrix->add_option("--n", o.n, "matrix size");
  matrix->add_option("--r", o.r, "matrix size for k-angulations");

  auto* counts = app.add_subcommand("counts", "count vectors and totals per level");
  add_class_options(counts, o);
  counts->add_option("--n-max", n_max, "last level")->required();
  counts->add_flag("--bfile", o.bfile, "emit OEIS b-file lines 'level total'");

  auto* charpoly = app.add_subcommand("charpoly", "characteristic polynomial det(A - λI)");
  add_class_options(charpoly, o);
  charpoly->add_option("--n", o.n, "matrix size");
  charpoly->add_option("--r", o.r, "matrix size for k-angulations");
  charpoly->add_option("--method", method, "recurrence | closed | determinant")
      ->check(CLI::IsMember({"recurrence", "closed", "determinant"}));

  auto* eigen = app.add_subcommand("eigen", "dominant real eigenvalue, its eigenvector and residual");
  add_class_options(eigen, o);
  eigen->add_option("--n", o.n, "matrix size");
  eigen->add_option("--r", o.r, "matrix size for k-angulations");
  eigen->add_option("--tol", tol, "root tolerance");
  eigen->add_option("--digits", digits, "significant digits printed")->check(CLI::Range(1, 100000));

  std::string suite;
  cli::VerifyLimits limits;
  std::string verify_format = "table";
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "vectors | charpoly | eigen | oracle | lemma1 | relation")
      ->required()
      ->check(CLI::IsMember({"vectors", "charpoly", "eigen", "oracle", "lemma1", "relation"}));
  verify->add_option("--n-max", limits.n_max, "largest size checked")->check(CLI::Range(2, 1000));
  verify->add_option("--max", limits.max, "bound for the lemma suite")->check(CLI::Range(0, 1000));
  verify->add_option("--workers", limits.workers, "enumeration threads")->check(CLI::Range(1u, 256u));
  verify->add_option("--format", verify_format, "table | csv | json")->check(CLI::IsMember({"table", "csv", "json"}));
  verify->add_flag("--force", limits.force, "lift size guards");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*matrix) return run_matrix(o);
    if (*counts) return run_counts(o, n_max);
    if (*charpoly) return run_charpoly(o, method);
    if (*eigen) return run_eigen(o, tol, digits);
    if (*verify) {
      const auto report = cli::run_verify(suite, limits);
      std::cout << cli::render_report(report, cli::parse_format(verify_format));
      return report.all_passed() ? 0 : 1;
    }
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const oracle::GuardExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
