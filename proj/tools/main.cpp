#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "qgb/error.hpp"
#include "qgb/parse.hpp"
#include "qgb/pipeline.hpp"

namespace {

std::vector<qgb::SymbolId> parse_order_spec(const std::string& spec, const qgb::Alphabet& a) {
  std::vector<qgb::SymbolId> out;
  std::string name;
  const auto flush = [&]() {
    if (name.empty()) return;
    out.push_back(a.require(name));
    name.clear();
  };
  for (const char c : spec) {
    if (c == '>' || c == ',' || c == ' ')
      flush();
    else
      name += c;
  }
  flush();
  return out;
}

struct CommonArgs {
  std::string problem_path;
  std::string order_spec;
  std::string dm_path;
  std::optional<std::size_t> max_new, max_amb;

  qgb::Problem load() const {
    qgb::Problem p = qgb::load_problem(problem_path);
    if (!order_spec.empty()) {
      p.precedence = parse_order_spec(order_spec, p.quiver.alphabet());
      qgb::DegLexOrder probe(p.quiver.alphabet(), p.precedence);
      (void)probe;
    }
    if (!dm_path.empty()) {
      const qgb::DegLexOrder ord = p.order();
      p.dm = qgb::divisor_map_from_json(qgb::load_json_file(dm_path), p.assumptions,
                                        p.quiver.alphabet(), ord);
    }
    if (max_new) p.completion.max_new_elements = *max_new;
    if (max_amb) p.completion.max_ambiguities = *max_amb;
    return p;
  }

  void attach(CLI::App* cmd, bool with_dm = true, bool with_bounds = true) {
    cmd->add_option("problem", problem_path, "problem file (JSON)")->required();
    cmd->add_option("--order", order_spec, "precedence override, greatest first, e.g. \"h2>b2>d>b1>h1>th1>th2>i\"");
    if (with_dm) cmd->add_option("--dm", dm_path, "divisor monomial override file (JSON)");
    if (with_bounds) {
      cmd->add_option("--max-new", max_new, "completion: maximum new elements");
      cmd->add_option("--max-amb", max_amb, "completion: maximum ambiguities processed");
    }
  }
};

int verdict_code(qgb::Verdict v) {
  switch (v) {
    case qgb::Verdict::Proved: return 0;
    case qgb::Verdict::NotProved: return 1;
    case qgb::Verdict::InputError: return 2;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"operator identities by quiver-compatible polynomial rewriting"};
  app.require_subcommand(1);

  CommonArgs check_args, sig_args, reduce_args, complete_args, certify_args, realize_args;
  bool check_criterion = false, check_definition = false, certify_criterion = false;
  std::string check_rep, check_out, check_cert;
  bool check_assume = false;

  auto* cmd_check = app.add_subcommand("check", "run the full pipeline and report a verdict");
  check_args.attach(cmd_check);
  cmd_check->add_flag("--criterion", check_criterion, "require the criterion checker for Proved");
  cmd_check->add_flag("--definition", check_definition, "verify against the definition (default)");
  cmd_check->add_option("--rep", check_rep, "representation file for the realization cross-check");
  cmd_check->add_flag("--assume-consistent", check_assume, "evaluate even when consistency is unknown");
  cmd_check->add_option("--out", check_out, "write the report JSON here");
  cmd_check->add_option("--cert", check_cert, "write the certificate JSON here");

  auto* cmd_sig = app.add_subcommand("signatures", "compatibility and signatures of the claim and assumptions");
  sig_args.attach(cmd_sig, false, false);

  auto* cmd_reduce = app.add_subcommand("reduce", "reduce the claim by the assumptions");
  reduce_args.attach(cmd_reduce, true, false);

  auto* cmd_complete = app.add_subcommand("complete", "run Q-order compatible completion");
  complete_args.attach(cmd_complete, false, true);

  std::string certify_out;
  auto* cmd_certify = app.add_subcommand("certify", "prove the claim and write the certificate");
  certify_args.attach(cmd_certify);
  cmd_certify->add_option("-o,--out", certify_out, "certificate output file")->required();
  cmd_certify->add_flag("--criterion", certify_criterion, "require the criterion checker");

  std::string verify_problem, verify_cert;
  bool verify_criterion_flag = false, verify_definition_flag = false;
  auto* cmd_verify = app.add_subcommand("verify", "re-verify a certificate file");
  cmd_verify->add_option("problem", verify_problem, "problem file (JSON)")->required();
  cmd_verify->add_option("certificate", verify_cert, "certificate file (JSON)")->required();
  cmd_verify->add_flag("--criterion", verify_criterion_flag, "use the criterion checker");
  cmd_verify->add_flag("--definition", verify_definition_flag, "use the definition checker (default)");

  std::string realize_rep;
  bool realize_assume = false;
  int realize_max_len = 6;
  auto* cmd_realize = app.add_subcommand("realize", "evaluate the polynomials in a matrix representation");
  realize_args.attach(cmd_realize, false, false);
  cmd_realize->add_option("--rep", realize_rep, "representation file (defaults to the problem's)");
  cmd_realize->add_flag("--assume-consistent", realize_assume, "evaluate even when consistency is unknown");
  cmd_realize->add_option("--max-len", realize_max_len, "path length bound for the consistency check");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_check->parsed() || cmd_certify->parsed()) {
      const bool certify = cmd_certify->parsed();
      CommonArgs& args = certify ? certify_args : check_args;
      const qgb::Problem p = args.load();
      qgb::CheckOptions opts;
      opts.require_criterion = certify ? certify_criterion : (check_criterion && !check_definition);
      if (!certify && !check_rep.empty()) opts.representation = check_rep;
      opts.assume_consistent = check_assume;
      const qgb::Report report = qgb::run_check(p, opts);
      std::cout << report.body.dump(2) << "\n";
      if (!certify && !check_out.empty()) qgb::save_json_file(report.body, check_out);
      const std::string cert_path = certify ? certify_out : check_cert;
      if (!cert_path.empty()) {
        if (report.certificate) {
          qgb::save_json_file(report.body["certificate"], cert_path);
        } else {
          std::cerr << "no certificate to write (verdict " << qgb::to_string(report.verdict)
                    << ")\n";
        }
      }
      return verdict_code(report.verdict);
    }

    if (cmd_sig->parsed()) {
      const qgb::Problem p = sig_args.load();
      const qgb::DegLexOrder ord = p.order();
      const auto describe = [&](const std::string& name, const qgb::Polynomial& f) {
        const auto info = p.quiver.compatibility(f);
        std::cout << name << ": " << qgb::format_poly(f, p.quiver.alphabet(), &ord) << "\n"
                  << "  sigma = " << p.quiver.signature_str(info.signature)
                  << (info.compatible ? "  compatible" : "  NOT compatible")
                  << (info.uniform ? ", uniform" : "") << "\n";
      };
      for (const auto& g : p.assumptions) describe(g.name, g.poly);
      describe("claim", p.claim);
      return 0;
    }

    if (cmd_reduce->parsed()) {
      const qgb::Problem p = reduce_args.load();
      const qgb::DegLexOrder ord = p.order();
      std::vector<qgb::Polynomial> polys;
      for (const auto& g : p.assumptions) polys.push_back(g.poly);
      const qgb::DivisorMap dm =
          p.dm ? *p.dm : qgb::DivisorMap::leading_monomials(polys, ord);
      qgb::ReduceOptions ropts;
      ropts.order = &ord;
      const qgb::ReduceResult rr = qgb::reduce(p.claim, polys, dm, ropts);
      std::cout << "steps: " << rr.trace.steps.size() << "\n"
                << "normal form: " << qgb::format_poly(rr.normal_form, p.quiver.alphabet(), &ord)
                << "\n";
      return rr.normal_form.is_zero() ? 0 : 1;
    }

    if (cmd_complete->parsed()) {
      const qgb::Problem p = complete_args.load();
      const qgb::DegLexOrder ord = p.order();
      const qgb::CompletionResult res = qgb::q_complete(p.quiver, p.assumptions, ord, p.completion);
      for (const auto& a : res.added)
        std::cout << a.name << " = " << qgb::format_poly(a.poly, p.quiver.alphabet(), &ord)
                  << "   (source " << qgb::format_monomial(a.origin.source, p.quiver.alphabet())
                  << ")\n";
      std::cout << "processed " << res.processed << " ambiguities, added " << res.added.size()
                << ", discarded " << res.discarded.size() << ", pending " << res.pending.size()
                << "\n";
      return 0;
    }

    if (cmd_verify->parsed()) {
      const qgb::Problem p = qgb::load_problem(verify_problem);
      const qgb::Certificate cert =
          qgb::certificate_from_json(qgb::load_json_file(verify_cert), p.quiver.alphabet());
      const bool use_criterion = verify_criterion_flag && !verify_definition_flag;
      const qgb::VerifyResult res = use_criterion ? qgb::verify_criterion(p.quiver, cert)
                                                  : qgb::verify_definition(p.quiver, cert);
      std::cout << (use_criterion ? "criterion" : "definition") << ": "
                << (res.ok ? "verified" : "REJECTED") << "\n";
      if (!res.ok) std::cout << "  " << res.diagnostic << "\n";
      return res.ok ? 0 : 1;
    }

    if (cmd_realize->parsed()) {
      const qgb::Problem p = realize_args.load();
      std::filesystem::path rep_path;
      if (!realize_rep.empty())
        rep_path = realize_rep;
      else if (p.representation_path)
        rep_path = *p.representation_path;
      else
        throw qgb::input_error("no representation file given (use --rep)");
      const qgb::Representation rep = qgb::load_representation(rep_path, p.quiver);
      const qgb::ConsistencyVerdict verdict =
          qgb::check_consistency(p.quiver, rep, realize_max_len);
      std::cout << "consistency: " << verdict.detail << "\n";
      const qgb::Realizer realizer(p.quiver, rep, verdict, realize_assume);
      bool all_assumptions_zero = true;
      for (const auto& g : p.assumptions) {
        const bool z = p.quiver.is_compatible(g.poly) && realizer.verify_zero(g.poly);
        all_assumptions_zero = all_assumptions_zero && z;
        std::cout << g.name << ": " << (z ? "all realizations zero" : "NONZERO realization") << "\n";
      }
      const bool claim_zero = p.quiver.is_compatible(p.claim) && realizer.verify_zero(p.claim);
      std::cout << "claim: " << (claim_zero ? "all realizations zero" : "NONZERO realization")
                << "\n";
      if (!all_assumptions_zero)
        std::cout << "note: some assumption does not hold in this representation\n";
      return claim_zero ? 0 : 1;
    }
  } catch (const qgb::input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const qgb::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
