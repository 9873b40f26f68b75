#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "permpoly/permpoly.hpp"

namespace permpoly::cli {

namespace {

class Renderer {
 public:
  Renderer(Field field, bool show_coeffs) : field_(std::move(field)), show_coeffs_(show_coeffs) {}

  std::string element(std::uint64_t idx) const {
    std::string s = std::to_string(idx);
    if (show_coeffs_) {
      const auto coeffs = field_.coefficients(static_cast<ElementIndex>(idx));
      s += " [";
      for (std::size_t i = 0; i < coeffs.size(); ++i) s += (i ? "," : "") + std::to_string(coeffs[i]);
      s += "]";
    }
    return s;
  }

  void field_line(const Json& f, std::ostream& out) const {
    out << "field " << field_.name() << ": p=" << f.at("p") << " n=" << f.at("n") << " modulus=" << f.at("modulus").dump()
        << "\n";
  }

  void word(const Json& w, std::ostream& out) const {
    field_line(w.at("field"), out);
    const auto& tokens = w.at("tokens");
    out << "tokens (applied in order): " << tokens.size() << "\n";
    std::size_t i = 0;
    for (const auto& t : tokens) {
      out << "  " << i++ << ": ";
      if (t.is_string()) {
        out << "inv\n";
      } else {
        const auto& lin = t.at("linear");
        out << "linear a=" << element(lin.at("a").get<std::uint64_t>())
            << " b=" << element(lin.at("b").get<std::uint64_t>()) << "\n";
      }
    }
  }

  void poly(const Json& p, std::ostream& out) const {
    const auto& coeffs = p.at("coeffs");
    std::vector<std::string> terms;
    for (std::size_t e = coeffs.size(); e-- > 0;) {
      const auto c = coeffs[e].get<std::uint64_t>();
      if (c == 0) continue;
      std::string term;
      const bool unit = c == 1 && !show_coeffs_;
      if (e == 0 || !unit) term = element(c);
      if (e > 0) {
        if (!term.empty()) term += "*";
        term += e == 1 ? "x" : "x^" + std::to_string(e);
      }
      terms.push_back(std::move(term));
    }
    out << "f(x) = ";
    if (terms.empty()) out << "0";
    for (std::size_t i = 0; i < terms.size(); ++i) out << (i ? " + " : "") << terms[i];
    out << "\n";
  }

  void table(const Json& t, std::ostream& out) const {
    field_line(t.at("field"), out);
    const auto& images = t.at("images");
    for (std::size_t x = 0; x < images.size(); ++x) {
      out << element(x) << " -> " << element(images[x].get<std::uint64_t>()) << "\n";
    }
  }

 private:
  Field field_;
  bool show_coeffs_;
};

std::string join(const Json& arr, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < arr.size(); ++i) s += (i ? sep : "") + arr[i].dump();
  return s;
}

void render_report(const Json& r, std::ostream& out) {
  out << "q = " << r.at("q") << "\n";
  out << "odd prime factors of q-2: " << (r.at("factors").empty() ? "none" : join(r.at("factors"))) << "\n";
  for (const auto& [l, order] : r.at("orders").items()) out << "order of 2 mod " << l << ": " << order << "\n";
  if (r.at("excluded_even_prime").get<bool>()) {
    out << "2 divides q-2 but is excluded: q^k - 1 is odd\n";
  }
  out << "forbidden divisors: " << (r.at("forbidden").empty() ? "none" : join(r.at("forbidden"))) << "\n";
  out << "permitted k: " << join(r.at("permitted")) << "\n";
}

void render_stats(const Json& s, std::ostream& out) {
  out << "stats: tokens=" << s.at("token_count") << " inv=" << s.at("inv_count")
      << " compiled_degree=" << (s.at("compiled_degree").is_null() ? "-inf" : s.at("compiled_degree").dump()) << "\n";
}

std::string read_source(const std::string& path, std::istream& in) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  std::ifstream file(path);
  if (!file) throw std::invalid_argument("cannot open word file '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
}

GenWord load_word(const CommandRequest& req, std::istream& in) {
  if (req.word_path.empty()) throw std::invalid_argument("--word is required");
  return word_from_json(parse_json(read_source(req.word_path, in)));
}

void emit(const Json& j, OutputFormat format, std::ostream& out, const std::function<void(std::ostream&)>& text) {
  if (format == OutputFormat::kJson) {
    out << j.dump() << "\n";
  } else {
    text(out);
  }
}

Gadget parse_gadget(const std::string& name) {
  if (name == "zieve") return Gadget::kZieve;
  if (name == "carlitz") return Gadget::kCarlitz;
  throw std::invalid_argument("unknown gadget '" + name + "' (expected zieve or carlitz)");
}

void add_field_options(CLI::App* sub, FieldParams& params) {
  sub->add_option_function<std::uint64_t>("--q", [&params](std::uint64_t v) { params.q = v; }, "Field order (prime power)");
  sub->add_option_function<std::uint32_t>("--p", [&params](std::uint32_t v) { params.p = v; }, "Characteristic");
  sub->add_option_function<std::uint32_t>("--n", [&params](std::uint32_t v) { params.n = v; }, "Extension degree");
  sub->add_option_function<std::vector<std::uint32_t>>(
         "--modulus", [&params](const std::vector<std::uint32_t>& v) { params.modulus = v; },
         "Monic irreducible modulus, constant term first, comma separated")
      ->delimiter(',');
}

}  // namespace

Field resolve_field(const FieldParams& params) {
  if (params.q) {
    if (params.p || params.n || params.modulus) {
      throw std::invalid_argument("give either --q or --p/--n, not both");
    }
    if (!prime_power(*params.q)) throw std::invalid_argument(std::to_string(*params.q) + " is not a prime power");
    return Field::of_order(*params.q);
  }
  if (!params.p) throw std::invalid_argument("a field is required: pass --q or --p and --n");
  const std::uint32_t n = params.n.value_or(1);
  if (params.modulus) return Field::make(*params.p, n, *params.modulus);
  return Field::make(*params.p, n);
}

ParseOutcome parse_request(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CommandRequest req;
  CLI::App app{"Permutations of finite fields as words in affine maps and x^(q-2)", "permpoly"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--show-coeffs", req.show_coeffs, "Show coefficient vectors next to element indices");

  std::string gadget = "zieve";

  auto* transposition = app.add_subcommand("transposition", "Word inducing the transposition (0 a)");
  add_field_options(transposition, req.field);
  transposition->add_option("--a", req.a, "Nonzero element index")->required();
  transposition->add_option("--gadget", gadget, "zieve | carlitz");
  transposition->add_flag("--simplify", req.simplify, "Simplify the emitted word");

  auto* decompose_cmd = app.add_subcommand("decompose", "Word inducing an arbitrary permutation");
  add_field_options(decompose_cmd, req.field);
  decompose_cmd->add_option("--perm", req.perm, "Cycle notation or comma-separated images")->required();
  decompose_cmd->add_option("--gadget", gadget, "zieve | carlitz");

  auto* compile_cmd = app.add_subcommand("compile", "Reduced polynomial of a word");
  compile_cmd->add_option("--word", req.word_path, "Word JSON file, '-' for stdin")->required();

  auto* verify = app.add_subcommand("verify", "Exit 0 iff the word induces the permutation");
  verify->add_option("--word", req.word_path, "Word JSON file, '-' for stdin")->required();
  verify->add_option("--perm", req.perm, "Cycle notation or comma-separated images")->required();

  auto* simplify_cmd = app.add_subcommand("simplify", "Simplify a word");
  simplify_cmd->add_option("--word", req.word_path, "Word JSON file, '-' for stdin")->required();

  auto* exceptional = app.add_subcommand("exceptional", "Extension degrees on which x^(q-2) permutes");
  exceptional->add_option_function<std::uint64_t>(
      "--q", [&req](std::uint64_t v) { req.field.q = v; }, "Field order")->required();
  exceptional->add_option("--max-k", req.max_k, "Largest extension degree")->required();

  auto* table = app.add_subcommand("table", "Full value table of a word");
  table->add_option("--word", req.word_path, "Word JSON file, '-' for stdin")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return {std::nullopt, code == 0 ? kExitOk : kExitInvalid};
  }

  try {
    req.gadget = parse_gadget(gadget);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return {std::nullopt, kExitInvalid};
  }
  req.format = format == "json" ? OutputFormat::kJson : OutputFormat::kText;

  if (transposition->parsed()) req.command = Command::kTransposition;
  if (decompose_cmd->parsed()) req.command = Command::kDecompose;
  if (compile_cmd->parsed()) req.command = Command::kCompile;
  if (verify->parsed()) req.command = Command::kVerify;
  if (simplify_cmd->parsed()) req.command = Command::kSimplify;
  if (exceptional->parsed()) req.command = Command::kExceptional;
  if (table->parsed()) req.command = Command::kTable;
  return {req, kExitOk};
}

int execute(const CommandRequest& req, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    switch (req.command) {
      case Command::kTransposition: {
        const Field field = resolve_field(req.field);
        GenWord w = word_transposition(field, field.checked(req.a), req.gadget);
        if (req.simplify) w = simplify(w);
        const Json j = to_json(w);
        emit(j, req.format, out, [&](std::ostream& o) { Renderer(field, req.show_coeffs).word(j, o); });
        return kExitOk;
      }
      case Command::kDecompose: {
        const Field field = resolve_field(req.field);
        const Permutation perm = parse_permutation(req.perm, field.order());
        const GenWord w = decompose(field, perm, req.gadget);
        Json j;
        j["word"] = to_json(w);
        j["stats"] = to_json(word_stats(w));
        emit(j, req.format, out, [&](std::ostream& o) {
          Renderer(field, req.show_coeffs).word(j.at("word"), o);
          render_stats(j.at("stats"), o);
        });
        return kExitOk;
      }
      case Command::kCompile: {
        const GenWord w = load_word(req, in);
        const Json j = to_json(compile(w));
        emit(j, req.format, out, [&](std::ostream& o) { Renderer(w.field(), req.show_coeffs).poly(j, o); });
        return kExitOk;
      }
      case Command::kVerify: {
        const GenWord w = load_word(req, in);
        const Permutation expected = parse_permutation(req.perm, w.field().order());
        const Permutation induced = word_to_permutation(w);
        const bool match = induced == expected;
        Json j;
        j["match"] = match;
        j["induced"] = induced.images();
        j["expected"] = expected.images();
        emit(j, req.format, out, [&](std::ostream& o) {
          if (match) {
            o << "ok: word induces " << induced.to_cycle_string() << "\n";
          } else {
            o << "mismatch: word induces " << induced.to_cycle_string() << ", expected " << expected.to_cycle_string()
              << "\n";
          }
        });
        return match ? kExitOk : kExitMismatch;
      }
      case Command::kSimplify: {
        const GenWord w = simplify(load_word(req, in));
        const Json j = to_json(w);
        emit(j, req.format, out, [&](std::ostream& o) { Renderer(w.field(), req.show_coeffs).word(j, o); });
        return kExitOk;
      }
      case Command::kExceptional: {
        if (!req.field.q) throw std::invalid_argument("--q is required");
        const Json j = to_json(report(*req.field.q, req.max_k));
        emit(j, req.format, out, [&](std::ostream& o) { render_report(j, o); });
        return kExitOk;
      }
      case Command::kTable: {
        const GenWord w = load_word(req, in);
        Json j;
        j["field"] = to_json(w.field());
        j["images"] = word_to_permutation(w).images();
        emit(j, req.format, out, [&](std::ostream& o) { Renderer(w.field(), req.show_coeffs).table(j, o); });
        return kExitOk;
      }
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitInvalid;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  const ParseOutcome parsed = parse_request(args, out, err);
  if (!parsed.request) return parsed.exit_code;
  return execute(*parsed.request, in, out, err);
}

}  // namespace permpoly::cli
