#include "fracops/cli.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "fracops/special.hpp"
#include "fracops/verify.hpp"

namespace fracops {

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v + 0.0);  // +0.0 folds away -0
  return buf;
}

std::string fmt_cell(Complex v) {
  if (v.imag() == 0.0) return fmt17(v.real());
  return fmt17(v.real()) + (v.imag() < 0.0 ? "-" : "+") +
         fmt17(std::abs(v.imag())) + "i";
}

double parse_real(const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a number: '" + text + "'");
  }
  if (used != text.size())
    throw std::invalid_argument("not a number: '" + text + "'");
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  return parts;
}

// Mini-syntax: power:a=<r>,p=<r> | exp | const:a=<r>,c=<r> |
// poly:a=<r>,coeffs=<r,r,...>
CausalFunction parse_function(const std::string& text) {
  if (text == "exp") return make_exponential();
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("bad function syntax: '" + text + "'");
  const std::string head = text.substr(0, colon);
  const std::string rest = text.substr(colon + 1);

  const auto expect_key = [](const std::string& field, const std::string& key) {
    const std::string prefix = key + "=";
    if (field.rfind(prefix, 0) != 0)
      throw std::invalid_argument("expected '" + key +
                                  "=' among the function arguments");
    return field.substr(prefix.size());
  };

  if (head == "power" || head == "const") {
    const auto fields = split(rest, ',');
    if (fields.size() != 2)
      throw std::invalid_argument("bad function syntax: '" + text + "'");
    const double a = parse_real(expect_key(fields[0], "a"));
    const double second =
        parse_real(expect_key(fields[1], head == "power" ? "p" : "c"));
    return head == "power" ? make_power(a, second)
                           : make_constant(a, Complex(second));
  }
  if (head == "poly") {
    const auto comma = rest.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("bad function syntax: '" + text + "'");
    const double a = parse_real(expect_key(rest.substr(0, comma), "a"));
    const std::string list = expect_key(rest.substr(comma + 1), "coeffs");
    std::vector<Complex> coeffs;
    for (const std::string& item : split(list, ','))
      coeffs.push_back(Complex(parse_real(item)));
    return make_polynomial(a, std::move(coeffs));
  }
  throw std::invalid_argument("unknown function kind: '" + head + "'");
}

Grid parse_grid(const std::string& text) {
  const auto fields = split(text, ',');
  if (fields.size() != 3)
    throw std::invalid_argument("grid must be 'x0,x1,n'");
  const double x0 = parse_real(fields[0]);
  const double x1 = parse_real(fields[1]);
  const double n = parse_real(fields[2]);
  if (n != static_cast<int>(n))
    throw std::invalid_argument("grid point count must be an integer");
  return Grid(x0, x1, static_cast<int>(n));
}

Convention parse_convention(const std::string& name) {
  if (name == "liouville") return Convention::liouville();
  if (name == "riemann") return Convention::riemann();
  if (name == "caputo") return Convention::caputo();
  if (name == "liouville_caputo") return Convention::liouville_caputo();
  throw std::invalid_argument("unknown convention: '" + name + "'");
}

struct CliOptions {
  std::string fn;
  std::string order;
  std::string grid;
  std::string conventions;
  std::string suite = "all";
  std::string out_path;
  double log_a = 0.0;
  double tol = 0.0;
  bool has_tol = false;
  QuadratureConfig cfg;
};

void run_eval(const CliOptions& opt, std::ostream& body) {
  const CausalFunction f = parse_function(opt.fn);
  const Complex s = parse_order(opt.order);
  const Grid grid = parse_grid(opt.grid);
  QuadratureConfig doubled = opt.cfg;
  doubled.nodes *= 2;

  body << "x,re,im,err_estimate\n";
  for (double x : grid.points()) {
    const Complex v = unified_apply(f, s, x, opt.cfg);
    const Complex v2 = unified_apply(f, s, x, doubled);
    const double err =
        std::abs(v - v2) + tail_truncation_bound(f, s, x, opt.cfg);
    body << fmt17(x) << ',' << fmt17(v.real()) << ',' << fmt17(v.imag()) << ','
         << fmt17(err) << '\n';
  }
}

int run_verify(const CliOptions& opt, std::ostream& body, std::ostream& err) {
  auto reports = run_suite(opt.suite, opt.cfg);
  bool all_passed = true;
  for (auto& rep : reports) {
    if (opt.has_tol) {
      rep.tolerance = opt.tol;
      rep.passed = rep.residual <= rep.tolerance;
    }
    all_passed = all_passed && rep.passed;
    body << format_report(rep) << '\n';
  }
  if (!all_passed) {
    err << "verification failed: at least one property out of tolerance\n";
    return 3;
  }
  return 0;
}

void run_compare(const CliOptions& opt, std::ostream& body) {
  const CausalFunction f = parse_function(opt.fn);
  const Complex s = parse_order(opt.order);
  const Grid grid = parse_grid(opt.grid);
  std::vector<Convention> convs;
  for (const std::string& name : split(opt.conventions, ','))
    convs.push_back(parse_convention(name));
  if (convs.empty())
    throw std::invalid_argument("at least one convention is required");

  body << 'x';
  for (const Convention& conv : convs) body << ',' << conv.name();
  body << '\n';
  for (double x : grid.points()) {
    body << fmt17(x);
    for (const Convention& conv : convs)
      body << ',' << fmt_cell(compare_conventions(f, s, conv, x, opt.cfg));
    body << '\n';
  }
}

void run_expand(const CliOptions& opt, std::ostream& body) {
  const ExpansionCoefficients coeffs = phi_expansion(opt.log_a, 2);
  for (std::size_t i = 0; i < coeffs.c.size(); ++i)
    body << 'c' << i << ',' << fmt17(coeffs.c[i]) << '\n';
  const char* labels[] = {"recon_err_1e-1", "recon_err_1e-2", "recon_err_1e-3"};
  const double eps[] = {1e-1, 1e-2, 1e-3};
  for (int i = 0; i < 3; ++i)
    body << labels[i] << ',' << fmt17(phi_reconstruction_error(coeffs, eps[i]))
         << '\n';
}

}  // namespace

std::complex<double> parse_order(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty order");
  if (text.back() == 'i') {
    const std::string head = text.substr(0, text.size() - 1);
    std::size_t cut = std::string::npos;
    for (std::size_t j = head.size(); j-- > 1;) {
      const char ch = head[j];
      if ((ch == '+' || ch == '-') && head[j - 1] != 'e' && head[j - 1] != 'E') {
        cut = j;
        break;
      }
    }
    if (cut == std::string::npos)
      throw std::invalid_argument("order must look like <re> or <re>+<im>i");
    return {parse_real(head.substr(0, cut)), parse_real(head.substr(cut))};
  }
  return {parse_real(text), 0.0};
}

std::string format_order(std::complex<double> s) {
  if (s.imag() == 0.0) return fmt17(s.real());
  return fmt17(s.real()) + (s.imag() < 0.0 ? "-" : "+") +
         fmt17(std::abs(s.imag())) + "i";
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"fractional integral and derivative operators over causal functions"};
  app.require_subcommand(1);
  CliOptions opt;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--nodes", opt.cfg.nodes, "quadrature nodes per panel");
    sub->add_option("--k", opt.cfg.regularization_k,
                    "integration-by-parts depth (default: auto)")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--tail-T", opt.cfg.tail_T,
                    "truncation horizon for a = -infinity");
    sub->add_option("--out", opt.out_path, "output path (default: stdout)");
  };

  CLI::App* eval = app.add_subcommand("eval", "evaluate an operator on a grid");
  eval->add_option("--fn", opt.fn, "function, e.g. power:a=0,p=1")->required();
  eval->add_option("--order", opt.order, "operator order <re>[+<im>i]")->required();
  eval->add_option("--grid", opt.grid, "grid x0,x1,n")->required();
  add_common(eval);

  CLI::App* verify = app.add_subcommand("verify", "run the property suite");
  verify->add_option("--suite", opt.suite, "suite name (default: all)");
  auto* tol_opt = verify->add_option("--tol", opt.tol, "tolerance override");
  add_common(verify);

  CLI::App* compare =
      app.add_subcommand("compare", "evaluate under several conventions");
  compare->add_option("--fn", opt.fn, "function, e.g. power:a=0,p=1")->required();
  compare->add_option("--order", opt.order, "operator order")->required();
  compare->add_option("--grid", opt.grid, "grid x0,x1,n")->required();
  compare->add_option("--conventions", opt.conventions, "comma-separated names")
      ->required();
  add_common(compare);

  CLI::App* expand =
      app.add_subcommand("expand", "kernel Taylor coefficients and errors");
  expand->add_option("--log-a", opt.log_a, "value of ln(x-y)")->required();
  expand->add_option("--out", opt.out_path, "output path (default: stdout)");

  std::vector<const char*> argv;
  argv.push_back("fracops");
  for (const std::string& arg : args) argv.push_back(arg.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << '\n';
    return 2;
  }
  opt.has_tol = tol_opt->count() > 0;

  std::ostringstream body;
  int code = 0;
  try {
    if (eval->parsed()) {
      run_eval(opt, body);
    } else if (verify->parsed()) {
      code = run_verify(opt, body, err);
    } else if (compare->parsed()) {
      run_compare(opt, body);
    } else if (expand->parsed()) {
      run_expand(opt, body);
    }
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  }

  if (!opt.out_path.empty()) {
    std::ofstream file(opt.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open output path '" << opt.out_path << "'\n";
      return 3;
    }
    file << body.str();
  } else {
    out << body.str();
  }
  return code;
}

}  // namespace fracops
