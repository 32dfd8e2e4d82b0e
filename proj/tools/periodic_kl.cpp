// periodic-kl: command-line front end.
//
// Exit codes: 0 ok, 2 usage or input error, 3 resource bound exceeded,
// 4 internal certification failure.

#include "pkl/io.hpp"
#include "pkl/multiplicity.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace pkl;
namespace fs = std::filesystem;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;
constexpr int kExitInternal = 4;
constexpr const char* kCacheEnv = "PERIODIC_KL_CACHE_DIR";

struct Config {
  std::string type = "A";
  int rank = 1;
  int l = 3;
  int height = 2;
  std::optional<int> coset;
  std::string format = "text";
  std::string output;
  int threads = 1;
  std::string cache_dir;
  bool force = false;
  int max_depth = 64;
};

struct Context {
  std::shared_ptr<const RootDatum> rd;
  std::shared_ptr<AffineWeylGroup> g;
  std::shared_ptr<PeriodicModule> module;
};

void add_common(CLI::App* app, Config& c) {
  app->add_option("--type", c.type, "Cartan type letter (A, B, C, D, G)")->capture_default_str();
  app->add_option("--rank", c.rank, "rank")->capture_default_str();
  app->add_option("--l", c.l, "order of the root of unity")->capture_default_str();
  app->add_option("--height", c.height, "window: |lambda_i| <= height")->capture_default_str()->check(CLI::NonNegativeNumber);
  app->add_option("--coset", c.coset, "window: restrict to one Lambda/Q coset");
  app->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}))->capture_default_str();
  app->add_option("--output,-o", c.output, "output path (default stdout)");
  app->add_option("--threads", c.threads, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  app->add_option("--cache-dir", c.cache_dir, std::string("cache directory (overrides $") + kCacheEnv + ")");
  app->add_flag("--force", c.force, "proceed although l violates the standing assumptions");
  app->add_option("--max-depth", c.max_depth, "truncation depth bound for the self-dual basis")->capture_default_str();
}

Context make_context(const Config& c) {
  if (c.type.size() != 1) throw InputError("type must be a single letter");
  Context ctx;
  ctx.rd = RootDatum::make_shared(parse_type_letter(c.type[0]), c.rank, c.l);
  auto report = ctx.rd->validate_l();
  for (auto w : report.warnings) std::cerr << "warning: " << describe(w) << "\n";
  if (!report.ok()) {
    std::string msg;
    for (auto v : report.violations) msg += "\n  " + describe(v);
    if (!c.force) throw InputError("l=" + std::to_string(c.l) + " is not admissible for " + ctx.rd->name() + ":" + msg);
    std::cerr << "warning: proceeding with inadmissible l:" << msg << "\n";
  }
  ctx.g = std::make_shared<AffineWeylGroup>(ctx.rd);
  ctx.module = std::make_shared<PeriodicModule>(ctx.g);
  return ctx;
}

Window make_window(const Config& c) { return Window{c.height, c.coset}; }

std::string cache_directory(const Config& c) {
  if (!c.cache_dir.empty()) return c.cache_dir;
  const char* env = std::getenv(kCacheEnv);
  return env ? env : "";
}

std::shared_ptr<SelfDualBasis> load_basis(const Config& c, const Context& ctx) {
  const std::string dir = cache_directory(c);
  fs::path file;
  if (!dir.empty()) {
    file = fs::path(dir) / (ctx.rd->name() + "-l" + std::to_string(ctx.rd->l()) + "-v" +
                            std::to_string(io::kFormatVersion) + ".json");
    std::ifstream in(file);
    if (in) {
      try {
        auto reps = io::representatives_from_json(*ctx.g, io::Json::parse(in));
        return std::make_shared<SelfDualBasis>(ctx.module, std::move(reps));
      } catch (const std::exception& e) {
        std::cerr << "warning: ignoring cache file " << file.string() << ": " << e.what() << "\n";
      }
    }
  }
  auto basis = std::make_shared<SelfDualBasis>(ctx.module, SelfDualOptions{4, c.max_depth});
  if (!file.empty()) {
    std::error_code ec;
    fs::create_directories(file.parent_path(), ec);
    fs::path tmp = file;
    tmp += ".tmp";
    std::ofstream out(tmp);
    out << io::dump(io::representatives_to_json(*ctx.g, basis->representatives()));
    out.close();
    if (out) fs::rename(tmp, file, ec);
    if (!out || ec) std::cerr << "warning: could not write cache file " << file.string() << "\n";
  }
  return basis;
}

void emit(const Config& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(c.output);
  if (!out) throw InputError("cannot open output file " + c.output);
  out << text;
}

std::string poly_output(const Config& c, const std::optional<Poly>& p) {
  if (c.format == "json") {
    io::Json j = p ? io::Json{{"polynomial", io::to_json(*p)}, {"text", p->to_string()}}
                   : io::Json{{"polynomial", nullptr}, {"text", nullptr}};
    return io::dump(j);
  }
  return (p ? p->to_string() : std::string("indeterminate")) + "\n";
}

template <class Tag>
std::string combination_output(const Config& c, const AffineWeylGroup& g, const Combination<Tag>& m) {
  if (c.format == "json") return io::dump(io::to_json(g, m));
  std::ostringstream out;
  if (c.format == "csv") out << "element,polynomial\n";
  for (const auto& [x, p] : m)
    out << g.format(x) << (c.format == "csv" ? "," : "\t")
        << (c.format == "csv" ? "\"" + p.to_string() + "\"" : p.to_string()) << "\n";
  return out.str();
}

// A basis element "t(..)*w[..]" or a JSON array of {element, polynomial}.
HeckeElement parse_hecke(const AffineWeylGroup& g, const std::string& text) {
  if (!text.empty() && text.front() == '[') {
    try {
      return io::combination_from_json<HeckeTag>(g, io::Json::parse(text));
    } catch (const io::Json::exception& e) {
      throw InputError(std::string("malformed Hecke element: ") + e.what());
    }
  }
  return HeckeElement::basis(g.parse(text));
}

std::string table_text(const AffineWeylGroup& g, const std::string& left, const std::string& right,
                       const std::map<std::pair<ExtAffineElement, ExtAffineElement>, Poly>& entries) {
  std::ostringstream out;
  out << left << "\t" << right << "\tpolynomial\n";
  for (const auto& [key, p] : entries) out << g.format(key.first) << "\t" << g.format(key.second) << "\t" << p.to_string() << "\n";
  return out.str();
}

Weight parse_weight(const Context& ctx, const std::string& text) {
  return ctx.g->parse("t" + (text.front() == '(' ? text : "(" + text + ")")).translation;
}

int run_selfcheck(const Config& c, const Context& ctx) {
  auto basis = load_basis(c, ctx);
  KostantPartition kostant(*ctx.rd);
  const auto& g = *ctx.g;
  Window window = make_window(c);
  auto elements = window.elements(g);
  bool all_ok = true;
  std::ostringstream out;
  auto line = [&](const std::string& name, bool ok, const std::string& detail) {
    out << (ok ? "ok   " : "FAIL ") << name << ": " << detail << "\n";
    all_ok = all_ok && ok;
  };

  line("certificate", basis->certificate().ok,
       std::to_string(basis->certificate().edges_checked) + " recursion edges, depth " + std::to_string(basis->depth()));

  std::size_t bad = 0;
  std::string first;
  for (const auto& x : elements) {
    auto why = basis->certify_element(x);
    if (!why.empty() && bad++ == 0) first = why;
  }
  line("basis elements", bad == 0, std::to_string(elements.size()) + " checked" + (bad ? ", first: " + first : ""));

  auto inv = inversion_check(*basis, kostant, window);
  line("inversion", inv.ok(),
       std::to_string(inv.pairs_checked) + " pairs, " + std::to_string(inv.deviations.size()) + " deviations");

  std::size_t koszul_bad = 0, koszul_checked = 0;
  for (const auto& x : elements) {
    auto hx = basis->element(x);
    auto q = [&](const ExtAffineElement& y) { return generic_polynomial(*basis, kostant, y, x, GenericKind::q); };
    for (const auto& y : elements) {
      if (!g.same_omega_component(x, y)) continue;
      ++koszul_checked;
      if (!(koszul_coefficient(g, q, y) == hx.coefficient(y))) ++koszul_bad;
    }
  }
  line("koszul", koszul_bad == 0, std::to_string(koszul_checked) + " coefficients, " + std::to_string(koszul_bad) + " mismatches");

  SemiInfinitePoset poset(g, window, ctx.rd->l());
  Weight mu = sufficient_translation(g, elements);
  std::size_t order_bad = 0, order_pairs = 0;
  for (std::size_t i = 0; i < poset.size(); ++i)
    for (std::size_t j = 0; j < poset.size(); ++j) {
      const auto& x = poset.elements()[i];
      const auto& y = poset.elements()[j];
      if (!g.same_omega_component(x, y)) continue;
      ++order_pairs;
      if (poset.relation(i, j) == OrderAnswer::indeterminate || poset.leq(i, j) != semiinf_leq_via_translation(g, x, y, mu))
        ++order_bad;
    }
  line("order", order_bad == 0, std::to_string(order_pairs) + " pairs, " + std::to_string(order_bad) + " disagreements");

  emit(c, out.str());
  return all_ok ? 0 : kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Periodic and generic Kazhdan-Lusztig polynomials and multiplicity tables", "periodic-kl"};
  app.require_subcommand(1);
  Config c;

  auto* validate = app.add_subcommand("validate", "check the order l against the standing assumptions");
  add_common(validate, c);

  auto* blocks = app.add_subcommand("blocks", "block labels in the closed fundamental alcove");
  add_common(blocks, c);

  std::string ox, oy;
  auto* order = app.add_subcommand("order", "semi-infinite order: one comparison, or the Hasse diagram of the window");
  add_common(order, c);
  order->add_option("--x", ox, "lower element");
  order->add_option("--y", oy, "upper element");

  auto* hecke = app.add_subcommand("hecke", "Hecke algebra arithmetic");
  hecke->require_subcommand(1);
  std::string ha, hb;
  int max_length = 24;
  auto* hmul = hecke->add_subcommand("mul", "product a*b");
  add_common(hmul, c);
  hmul->add_option("--a", ha, "left factor")->required();
  hmul->add_option("--b", hb, "right factor")->required();
  auto* hbar = hecke->add_subcommand("bar", "bar involution");
  add_common(hbar, c);
  hbar->add_option("--element", ha, "element")->required();
  auto* hkl = hecke->add_subcommand("kl", "Kazhdan-Lusztig basis element");
  add_common(hkl, c);
  hkl->add_option("--x", ha, "element")->required();
  hkl->add_option("--max-length", max_length, "length bound")->capture_default_str();

  std::string bx;
  auto* basis_cmd = app.add_subcommand("basis", "self-dual element of the periodic module");
  add_common(basis_cmd, c);
  basis_cmd->add_option("--x", bx, "element")->required();

  std::string table_kind = "p";
  auto* table = app.add_subcommand("table", "periodic or generic polynomial table on the window");
  add_common(table, c);
  table->add_option("--kind", table_kind, "p, q or qprime")->check(CLI::IsMember({"p", "q", "qprime"}))->capture_default_str();

  auto* mult = app.add_subcommand("mult", "graded multiplicities of the principal block");
  mult->require_subcommand(1);
  std::string mx, my, mnu;
  auto add_xy = [&](CLI::App* sub) {
    add_common(sub, c);
    sub->add_option("--x", mx, "x (omit both --x and --y for the whole table)");
    sub->add_option("--y", my, "y");
  };
  auto* siv = mult->add_subcommand("simple-in-verma", "[M(x.0) : L(y.0)]");
  add_xy(siv);
  auto* vip = mult->add_subcommand("verma-in-projective", "(P : M(x.0)) truncated by nu");
  add_xy(vip);
  vip->add_option("--nu", mnu, "truncation weight, e.g. (1,0)")->required();
  auto* baby = mult->add_subcommand("baby", "(P_y : Z_x) = [Z_x : L_y]");
  add_xy(baby);

  auto* selfcheck = app.add_subcommand("selfcheck", "certificate, inversion, Koszul and order checks on the window");
  add_common(selfcheck, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    Context ctx;
    if (validate->parsed()) {
      if (c.type.size() != 1) throw InputError("type must be a single letter");
      auto rd = RootDatum::make(parse_type_letter(c.type[0]), c.rank, c.l);
      auto report = rd.validate_l();
      std::ostringstream out;
      if (c.format == "json") {
        io::Json v = io::Json::array(), w = io::Json::array();
        for (auto x : report.violations) v.push_back(describe(x));
        for (auto x : report.warnings) w.push_back(describe(x));
        out << io::dump({{"datum", rd.name()}, {"l", rd.l()}, {"ok", report.ok()}, {"violations", v}, {"warnings", w}});
      } else {
        out << rd.name() << " l=" << rd.l() << ": " << (report.ok() ? "ok" : "violations") << "\n";
        for (auto x : report.violations) out << "  violation: " << describe(x) << "\n";
        for (auto x : report.warnings) out << "  warning: " << describe(x) << "\n";
      }
      emit(c, out.str());
      return report.ok() ? 0 : kExitUsage;
    }

    ctx = make_context(c);
    const auto& g = *ctx.g;

    if (blocks->parsed()) {
      auto labels = enumerate_blocks(g);
      if (c.format == "json") emit(c, io::dump(io::to_json(labels)));
      else if (c.format == "csv") emit(c, io::to_csv(labels));
      else {
        std::ostringstream out;
        out << "representative\tstabilizer\ttype\textended_class\n";
        for (const auto& b : labels)
          out << b.representative.to_string() << "\t" << b.stabilizer_string() << "\t" << (b.regular ? "regular" : "singular")
              << "\t" << b.extended_class << "\n";
        emit(c, out.str());
      }
      return 0;
    }

    if (order->parsed()) {
      if (ox.empty() != oy.empty()) throw InputError("give both --x and --y, or neither");
      if (!ox.empty()) {
        auto answer = semiinf_leq_generated(g, g.parse(ox), g.parse(oy), ctx.rd->l());
        if (c.format == "json") emit(c, io::dump({{"x", ox}, {"y", oy}, {"leq", to_string(answer)}}));
        else emit(c, to_string(answer) + "\n");
        return 0;
      }
      SemiInfinitePoset poset(g, make_window(c), ctx.rd->l());
      if (c.format == "json") {
        emit(c, io::dump(io::hasse_to_json(g, poset)));
      } else {
        std::ostringstream out;
        if (c.format == "csv") out << "lower,upper\n";
        for (const auto& [lo, hi] : poset.hasse_edges())
          out << g.format(poset.elements()[lo]) << (c.format == "csv" ? "," : " < ") << g.format(poset.elements()[hi]) << "\n";
        emit(c, out.str());
      }
      return 0;
    }

    if (hecke->parsed()) {
      HeckeAlgebra algebra(ctx.g);
      HeckeElement result;
      if (hmul->parsed()) result = algebra.mul(parse_hecke(g, ha), parse_hecke(g, hb));
      else if (hbar->parsed()) result = algebra.bar_involution(parse_hecke(g, ha));
      else {
        auto x = g.parse(ha);
        result = algebra.kl_basis_element(x, max_length);
        auto why = algebra.certify_kl(x, result);
        if (!why.empty()) throw InternalError("KL element failed certification: " + why);
      }
      emit(c, combination_output(c, g, result));
      return 0;
    }

    if (basis_cmd->parsed()) {
      auto basis = load_basis(c, ctx);
      emit(c, combination_output(c, g, basis->element(g.parse(bx))));
      return 0;
    }

    if (table->parsed()) {
      auto basis = load_basis(c, ctx);
      KostantPartition kostant(*ctx.rd);
      auto t = build_table(*basis, kostant, parse_table_kind(table_kind), make_window(c), c.threads);
      if (c.format == "json") emit(c, io::dump(io::to_json(g, t)));
      else if (c.format == "csv") emit(c, io::to_csv(g, t));
      else emit(c, table_text(g, "y", "x", t.entries));
      return 0;
    }

    if (mult->parsed()) {
      if (mx.empty() != my.empty()) throw InputError("give both --x and --y, or neither");
      auto basis = load_basis(c, ctx);
      auto kostant = std::make_shared<KostantPartition>(*ctx.rd);
      MultiplicityTables tables(basis, kostant, make_window(c), c.threads);
      MultiplicityKind kind = siv->parsed()   ? MultiplicityKind::simple_in_verma
                              : vip->parsed() ? MultiplicityKind::verma_in_projective
                                              : MultiplicityKind::baby_verma_in_projective;
      std::optional<Weight> nu;
      if (vip->parsed()) nu = parse_weight(ctx, mnu);
      if (!mx.empty()) {
        auto x = g.parse(mx), y = g.parse(my);
        std::optional<Poly> value;
        switch (kind) {
          case MultiplicityKind::simple_in_verma: value = tables.simple_in_verma(x, y); break;
          case MultiplicityKind::verma_in_projective: value = tables.verma_in_projective(x, y, *nu); break;
          default: value = tables.baby_verma_in_projective(x, y); break;
        }
        emit(c, poly_output(c, value));
        return 0;
      }
      auto t = tables.build(kind, nu);
      if (c.format == "json") emit(c, io::dump(io::to_json(g, t)));
      else if (c.format == "csv") emit(c, io::to_csv(g, t));
      else emit(c, table_text(g, "x", "y", t.entries));
      return 0;
    }

    if (selfcheck->parsed()) return run_selfcheck(c, ctx);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return 0;
}
