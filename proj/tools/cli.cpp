#include "cli.hpp"

#include "circbasis/expansion.hpp"
#include "circbasis/export.hpp"
#include "circbasis/matrices.hpp"
#include "circbasis/phi_family.hpp"
#include "circbasis/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <sstream>

namespace circbasis {

namespace {

constexpr int kUsageError = 2;

struct Options {
  int dim = 0;
  bool force = false;
  std::string out_path;
  std::string format;
  std::string kind;
  std::string checks = "all";
  bool timings = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void guard_dim(const Options& opt, int limit) {
  if (opt.dim < 2 || opt.dim % 2 != 0) {
    throw UsageError("--dim must be an even integer >= 2, got " + std::to_string(opt.dim));
  }
  if (opt.dim > limit && !opt.force) {
    throw UsageError("--dim " + std::to_string(opt.dim) + " exceeds the limit of " + std::to_string(limit) +
                     " for this command; pass --force to override");
  }
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// Sends output to --out when given, otherwise to `out`.
int emit(const Options& opt, std::ostream& out, const std::function<void(std::ostream&)>& body) {
  if (opt.out_path.empty()) {
    body(out);
    return 0;
  }
  std::ofstream file(opt.out_path);
  if (!file) throw UsageError("cannot open " + opt.out_path + " for writing");
  body(file);
  return 0;
}

int cmd_enum(const Options& opt, std::ostream& out) {
  guard_dim(opt, 14);
  const PhiFamily family = enumerate_phi(opt.dim);
  return emit(opt, out, [&](std::ostream& os) {
    if (opt.format == "json") {
      write_enum_json(os, family);
    } else {
      write_enum_text(os, family);
    }
  });
}

int cmd_verify(const Options& opt, std::ostream& out) {
  guard_dim(opt, 12);
  const auto names = split_list(opt.checks);
  for (const auto& name : names) {
    if (name != "all" && std::find(check_names().begin(), check_names().end(), name) == check_names().end()) {
      throw UsageError("unknown check '" + name + "'");
    }
  }
  if (names.empty()) throw UsageError("--checks needs at least one name");
  const VerifyReport report = run_verify(opt.dim, names);
  emit(opt, out, [&](std::ostream& os) { write_report(os, report, opt.timings); });
  return report.exit_code();
}

int cmd_matrix(const Options& opt, std::ostream& out) {
  guard_dim(opt, 12);
  const PhiFamily family = enumerate_phi(opt.dim);
  const IncidenceMatrix d = d_matrix(family);
  const bool json = opt.format == "json";
  if (opt.kind == "d") {
    return emit(opt, out, [&](std::ostream& os) { json ? write_matrix_json(os, family, d) : write_matrix_csv(os, family, d); });
  }
  if (opt.kind == "r") {
    const IntMatrix r = r_matrix(family, d);
    return emit(opt, out, [&](std::ostream& os) { json ? write_matrix_json(os, family, r) : write_matrix_csv(os, family, r); });
  }
  const DyadicMatrix n = n_matrix(family, d);
  return emit(opt, out, [&](std::ostream& os) { json ? write_matrix_json(os, family, n) : write_matrix_csv(os, family, n); });
}

int cmd_expand(const Options& opt, std::ostream& out) {
  guard_dim(opt, 12);
  const PhiFamily family = enumerate_phi(opt.dim);
  const OrbitExpansion expansion = vd_expansion(family, n_matrix(family, d_matrix(family)));
  return emit(opt, out, [&](std::ostream& os) { os << expansion.to_string() << '\n'; });
}

int cmd_poset(const Options& opt, std::ostream& out) {
  guard_dim(opt, 8);
  const PhiFamily family = enumerate_phi(opt.dim);
  return emit(opt, out, [&](std::ostream& os) { write_poset_dot(os, family); });
}

void add_common(CLI::App* sub, Options& opt) {
  sub->add_option("--dim,-D", opt.dim, "Even dimension D of V_D")->required();
  sub->add_option("--out,-o", opt.out_path, "Write output to this file instead of stdout");
  sub->add_flag("--force", opt.force, "Allow dimensions above the default limit");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with the indicator basis of functions on a symplectic F2 space"};
  app.require_subcommand(1);
  Options opt;

  auto* en = app.add_subcommand("enum", "List the admissible patterns with |B|, eps(B) and dim<B>");
  add_common(en, opt);
  en->add_option("--format", opt.format, "text or json")->check(CLI::IsMember({"text", "json"}))->default_val("text");

  auto* ver = app.add_subcommand("verify", "Run structural checks");
  add_common(ver, opt);
  ver->add_option("--checks", opt.checks, "Comma-separated check names, or 'all'")->default_val("all");
  ver->add_flag("--timings", opt.timings, "Print elapsed time per check");

  auto* mat = app.add_subcommand("matrix", "Export the d, r or n matrix");
  add_common(mat, opt);
  mat->add_option("--kind", opt.kind, "d, r or n")->check(CLI::IsMember({"d", "r", "n"}))->required();
  mat->add_option("--format", opt.format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->default_val("csv");

  auto* exp = app.add_subcommand("expand", "Print box{V_D} as a sum over rotation orbits");
  add_common(exp, opt);

  auto* pos = app.add_subcommand("poset", "Export the Hasse diagram of the order");
  add_common(pos, opt);
  pos->add_option("--format", opt.format, "dot")->check(CLI::IsMember({"dot"}))->default_val("dot");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (en->parsed()) return cmd_enum(opt, out);
    if (ver->parsed()) return cmd_verify(opt, out);
    if (mat->parsed()) return cmd_matrix(opt, out);
    if (exp->parsed()) return cmd_expand(opt, out);
    return cmd_poset(opt, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const InvalidDimension& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace circbasis
