#include "neutro/cli.hpp"

#include <cmath>
#include <cstddef>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace neutro::cli {

namespace {

using io::Format;
using io::PairResult;
using io::RecordBatch;
using io::render_double;
using io::Schema;
using io::TripletResult;

void warn_about(const RecordBatch& batch, std::ostream& err) {
  if (batch.ignored_columns > 0) {
    err << "warning: ignored " << batch.ignored_columns << " extra column(s)\n";
  }
  if (batch.clamped_values > 0) {
    err << "warning: clamped " << batch.clamped_values << " value(s) onto [0,1]\n";
  }
}

std::vector<TripletResult> compute_triplets(const RecordBatch& batch, Variant variant) {
  std::vector<TripletResult> rows;
  rows.reserve(batch.triplets.size());
  for (const NeutrosophicTriplet& x : batch.triplets) {
    rows.push_back({x, deca_decompose(x, variant), entropy_triad(x, variant)});
  }
  return rows;
}

std::vector<PairResult> compute_pairs(const RecordBatch& batch, Variant variant) {
  std::vector<PairResult> rows;
  rows.reserve(batch.pairs.size());
  for (const BifuzzyPair& x : batch.pairs) {
    rows.push_back({x, penta_decompose(x, variant)});
  }
  return rows;
}

// mu,omega,nu plus the triad and the redundant non-entropy convenience column.
void write_triad_rows(const std::vector<TripletResult>& rows, Format format, std::ostream& out) {
  if (format == Format::csv) {
    out << "mu,omega,nu,entropy,neutro_entropy,anti_entropy,non_entropy\n";
  }
  for (const TripletResult& r : rows) {
    const double non_entropy = r.triad.anti_entropy.value() + r.triad.neutro_entropy.value();
    if (format == Format::csv) {
      out << render_double(r.input.mu) << ',' << render_double(r.input.omega) << ','
          << render_double(r.input.nu) << ',' << render_double(r.triad.entropy) << ','
          << render_double(r.triad.neutro_entropy) << ',' << render_double(r.triad.anti_entropy)
          << ',' << render_double(non_entropy) << '\n';
    } else {
      out << "{\"mu\":" << render_double(r.input.mu) << ",\"omega\":"
          << render_double(r.input.omega) << ",\"nu\":" << render_double(r.input.nu)
          << ",\"entropy\":" << render_double(r.triad.entropy) << ",\"neutro_entropy\":"
          << render_double(r.triad.neutro_entropy) << ",\"anti_entropy\":"
          << render_double(r.triad.anti_entropy) << ",\"non_entropy\":"
          << render_double(non_entropy) << "}\n";
    }
    if (!out) throw SinkFailure("output stream failed");
  }
}

void write_prototype_rows(Variant variant, Format format, std::ostream& out) {
  if (format == Format::csv) {
    out << "label,mu,omega,nu,t,t_w,f,f_w,c,n,s,u,a,h,entropy,neutro_entropy,anti_entropy\n";
  }
  for (PrototypeLabel label : kPrototypeLabels) {
    const NeutrosophicTriplet x = prototype_coordinates(label);
    const DecaIndexes d = deca_decompose(x, variant);
    const EntropyTriad triad = entropy_triad(x, variant);
    const double cells[] = {x.mu,  x.omega, x.nu,  d.t,   d.t_w, d.f,
                            d.f_w, d.c,     d.n,   d.s,   d.u,   d.a,
                            d.h,   triad.entropy,  triad.neutro_entropy, triad.anti_entropy};
    if (format == Format::csv) {
      out << to_string(label);
      for (double v : cells) out << ',' << render_double(v);
      out << '\n';
    } else {
      static constexpr std::string_view keys[] = {
          "mu", "omega", "nu", "t", "t_w", "f", "f_w", "c", "n", "s", "u", "a", "h",
          "entropy", "neutro_entropy", "anti_entropy"};
      out << "{\"label\":\"" << to_string(label) << '"';
      for (std::size_t i = 0; i < std::size(keys); ++i) {
        out << ",\"" << keys[i] << "\":" << render_double(cells[i]);
      }
      out << "}\n";
    }
    if (!out) throw SinkFailure("output stream failed");
  }
}

// ---------------------------------------------------------------------------
// Invariant sweep behind the `check` command. Every identity that holds in
// real arithmetic is measured as a max absolute deviation over the lattice and
// compared against the configured tolerance.

struct CheckRow {
  std::string name;
  double deviation = 0.0;
};

void track(CheckRow& row, double deviation) {
  if (deviation > row.deviation) row.deviation = deviation;
}

std::vector<CheckRow> sweep_invariants(Variant variant, double step) {
  const bool invertible = variant == Variant::I;

  CheckRow penta_partition{"penta_partition_sum"};
  CheckRow penta_floor{"penta_index_floor"};
  CheckRow penta_excl_net{"penta_exclusion_net"};
  CheckRow penta_excl_def{"penta_exclusion_definedness"};
  CheckRow penta_closure{"penta_entropy_closure"};
  CheckRow penta_closed{"penta_entropy_closed_form"};
  CheckRow penta_roundtrip{"penta_roundtrip"};

  const RecordBatch square = io::generate_grid(Schema::pair, step);
  for (const BifuzzyPair& x : square.pairs) {
    const PentaIndexes p = penta_decompose(x, variant);
    const double sum = p.truth.value() + p.falsity.value() + p.ambiguity.value() +
                       p.ignorance.value() + p.contradiction.value();
    track(penta_partition, std::fabs(sum - 1.0));
    const double least = std::fmin(std::fmin(p.truth, p.falsity),
                                   std::fmin(p.ambiguity, std::fmin(p.ignorance, p.contradiction)));
    track(penta_floor, std::fmax(0.0, -least));
    track(penta_excl_net, std::fabs(p.truth.value() * p.falsity.value()));
    track(penta_excl_def, std::fabs(p.ignorance.value() * p.contradiction.value()));

    const BifuzzyEntropy e = bifuzzy_entropy(x, variant);
    track(penta_closure, std::fabs(e.entropy.value() + e.non_entropy.value() - 1.0));
    const BifuzzyAux aux = bifuzzy_aux(x);
    const double abs_net = std::fabs(aux.net_truth);
    const double abs_def = std::fabs(aux.definedness);
    const double closed = variant == Variant::I ? 1.0 - abs_net
                                                : 1.0 - abs_net * (1.0 - abs_def / 2.0);
    track(penta_closed, std::fabs(e.entropy.value() - closed));

    if (invertible) {
      const BifuzzyPair back = penta_recompose(p);
      track(penta_roundtrip, std::fmax(std::fabs(back.mu.value() - x.mu.value()),
                                       std::fabs(back.nu.value() - x.nu.value())));
    }
  }

  CheckRow deca_partition{"deca_partition_sum"};
  CheckRow deca_floor{"deca_index_floor"};
  CheckRow group_net{"deca_group_net"};
  CheckRow group_def{"deca_group_definedness"};
  CheckRow group_ambiguity{"deca_group_ambiguity"};
  CheckRow excl_net{"deca_exclusion_net"};
  CheckRow excl_def{"deca_exclusion_definedness"};
  CheckRow support{"deca_support_bound"};
  CheckRow triad_sum{"deca_triad_sum"};
  CheckRow triad_closed{"deca_triad_closed_form"};
  CheckRow deca_roundtrip{"deca_roundtrip"};
  CheckRow proto_combination{"deca_prototype_combination"};
  CheckRow collapse{"deca_penta_collapse"};
  CheckRow indicators{"prototype_indicators"};

  // Variant I forces at least six zero indexes; the damped family can leave
  // five alive (both residuals next to an overflowing split).
  const int support_bound = invertible ? 4 : 5;

  const RecordBatch cube = io::generate_grid(Schema::triplet, step);
  for (const NeutrosophicTriplet& x : cube.triplets) {
    const DecaIndexes d = deca_decompose(x, variant);
    const double idx[] = {d.t, d.t_w, d.f, d.f_w, d.c, d.n, d.s, d.u, d.a, d.h};
    double sum = 0.0, least = idx[0];
    for (double v : idx) {
      sum += v;
      least = std::fmin(least, v);
    }
    track(deca_partition, std::fabs(sum - 1.0));
    track(deca_floor, std::fmax(0.0, -least));

    const BifuzzyAux aux = bifuzzy_aux({x.mu, x.nu});
    const double abs_net = std::fabs(aux.net_truth);
    const double abs_def = std::fabs(aux.definedness);
    double net_mass = abs_net, def_mass = abs_def, ambiguity_mass = (1.0 - abs_net) - abs_def;
    if (variant == Variant::II) {
      net_mass = abs_net * (1.0 - abs_def / 2.0);
      def_mass = abs_def * (1.0 - abs_net / 2.0);
      ambiguity_mass = (1.0 - abs_net) * (1.0 - abs_def);
    }
    track(group_net, std::fabs(d.t.value() + d.t_w.value() + d.f.value() + d.f_w.value() - net_mass));
    track(group_def, std::fabs(d.c.value() + d.u.value() + d.n.value() + d.s.value() - def_mass));
    track(group_ambiguity, std::fabs(d.a.value() + d.h.value() - ambiguity_mass));
    track(excl_net, std::fabs((d.t.value() + d.t_w.value()) * (d.f.value() + d.f_w.value())));
    track(excl_def, std::fabs((d.u.value() + d.n.value()) * (d.c.value() + d.s.value())));
    track(support, std::fmax(0.0, support_count(d) - support_bound));

    const EntropyTriad triad = entropy_triad(x, variant);
    track(triad_sum, std::fabs(triad.entropy.value() + triad.neutro_entropy.value() +
                               triad.anti_entropy.value() - 1.0));
    const double omega_bar = 1.0 - x.omega.value();
    const double kept = std::fmin(abs_net, omega_bar);
    double closed_entropy = 1.0 - abs_net;
    double closed_neutro = abs_net - kept;
    double closed_anti = kept;
    if (variant == Variant::II) {
      const double net_scale = 1.0 - abs_def / 2.0;
      closed_entropy = 1.0 - abs_net * net_scale;
      closed_neutro = (abs_net - kept) * net_scale;
      closed_anti = kept * net_scale;
    }
    track(triad_closed, std::fmax(std::fabs(triad.entropy.value() - closed_entropy),
                                  std::fmax(std::fabs(triad.neutro_entropy.value() - closed_neutro),
                                            std::fabs(triad.anti_entropy.value() - closed_anti))));

    if (invertible) {
      const NeutrosophicTriplet back = deca_recompose(d);
      track(deca_roundtrip, std::fmax(std::fabs(back.mu.value() - x.mu.value()),
                                      std::fmax(std::fabs(back.omega.value() - x.omega.value()),
                                                std::fabs(back.nu.value() - x.nu.value()))));
      const NeutrosophicTriplet mix = prototype_combination(d);
      track(proto_combination, std::fmax(std::fabs(mix.mu.value() - back.mu.value()),
                                         std::fmax(std::fabs(mix.omega.value() - back.omega.value()),
                                                   std::fabs(mix.nu.value() - back.nu.value()))));
      if (x.omega.value() == 0.0) {
        const PentaIndexes p = penta_decompose({x.mu, x.nu}, Variant::I);
        double dev = std::fabs(d.t.value() - p.truth.value());
        dev = std::fmax(dev, std::fabs(d.f.value() - p.falsity.value()));
        dev = std::fmax(dev, std::fabs(d.a.value() - p.ambiguity.value()));
        dev = std::fmax(dev, std::fabs(d.u.value() - p.ignorance.value()));
        dev = std::fmax(dev, std::fabs(d.c.value() - p.contradiction.value()));
        dev = std::fmax(dev, std::fmax(d.t_w.value(), d.f_w.value()));
        dev = std::fmax(dev, std::fmax(d.n.value(), d.s.value()));
        dev = std::fmax(dev, d.h.value());
        track(collapse, dev);
      }
    }
  }

  for (PrototypeLabel label : kPrototypeLabels) {
    const NeutrosophicTriplet x = prototype_coordinates(label);
    const DecaIndexes d = deca_decompose(x, variant);
    const double idx[] = {d.t, d.t_w, d.f, d.f_w, d.c, d.n, d.s, d.u, d.a, d.h};
    static constexpr PrototypeLabel order[] = {
        PrototypeLabel::T, PrototypeLabel::Tw, PrototypeLabel::F, PrototypeLabel::Fw,
        PrototypeLabel::C, PrototypeLabel::N,  PrototypeLabel::S, PrototypeLabel::U,
        PrototypeLabel::A, PrototypeLabel::H};
    for (std::size_t i = 0; i < 10; ++i) {
      const double expected = order[i] == label ? 1.0 : 0.0;
      track(indicators, std::fabs(idx[i] - expected));
    }
    if (invertible) {
      const NeutrosophicTriplet back = deca_recompose(d);
      track(indicators, std::fmax(std::fabs(back.mu.value() - x.mu.value()),
                                  std::fmax(std::fabs(back.omega.value() - x.omega.value()),
                                            std::fabs(back.nu.value() - x.nu.value()))));
    }
  }

  std::vector<CheckRow> rows = {penta_partition, penta_floor,  penta_excl_net, penta_excl_def,
                                penta_closure,   penta_closed, deca_partition, deca_floor,
                                group_net,       group_def,    group_ambiguity, excl_net,
                                excl_def,        support,      triad_sum,      triad_closed,
                                indicators};
  if (invertible) {
    rows.insert(rows.begin() + 6, penta_roundtrip);
    rows.push_back(deca_roundtrip);
    rows.push_back(proto_combination);
    rows.push_back(collapse);
  }
  return rows;
}

int run_check(const Config& config, std::ostream& out) {
  const std::vector<CheckRow> rows = sweep_invariants(config.variant, config.step);
  bool all_pass = true;
  out << "check,max_deviation,tolerance,status\n";
  for (const CheckRow& row : rows) {
    const bool pass = row.deviation <= config.tolerance;
    all_pass = all_pass && pass;
    out << row.name << ',' << render_double(row.deviation) << ','
        << render_double(config.tolerance) << ',' << (pass ? "pass" : "fail") << '\n';
  }
  if (!out) throw SinkFailure("output stream failed");
  return all_pass ? kExitOk : kExitInvariant;
}

}  // namespace

int exit_code_for(const std::exception& e) noexcept {
  if (dynamic_cast<const VariantUnsupported*>(&e) != nullptr) return kExitUnsupported;
  return kExitInput;
}

int run(const Config& config, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    std::ifstream file_in;
    std::istream* source = &in;
    if (config.input_path) {
      file_in.open(*config.input_path);
      if (!file_in) {
        err << "error: cannot open input: " << config.input_path->string() << '\n';
        return kExitInput;
      }
      source = &file_in;
    }
    std::ofstream file_out;
    std::ostream* sink = &out;
    if (config.output_path) {
      file_out.open(*config.output_path);
      if (!file_out) {
        err << "error: cannot open output: " << config.output_path->string() << '\n';
        return kExitInput;
      }
      sink = &file_out;
    }

    switch (config.command) {
      case Command::deca: {
        const RecordBatch batch =
            io::parse_records(*source, config.format, Schema::triplet);
        warn_about(batch, err);
        io::write_results(std::span<const TripletResult>(compute_triplets(batch, config.variant)),
                          config.format, *sink);
        return kExitOk;
      }
      case Command::penta: {
        const RecordBatch batch = io::parse_records(*source, config.format, Schema::pair);
        warn_about(batch, err);
        io::write_results(std::span<const PairResult>(compute_pairs(batch, config.variant)),
                          config.format, *sink);
        return kExitOk;
      }
      case Command::entropy: {
        const RecordBatch batch =
            io::parse_records(*source, config.format, Schema::triplet);
        warn_about(batch, err);
        write_triad_rows(compute_triplets(batch, config.variant), config.format, *sink);
        return kExitOk;
      }
      case Command::grid: {
        const RecordBatch batch = io::generate_grid(Schema::triplet, config.step);
        io::write_results(std::span<const TripletResult>(compute_triplets(batch, config.variant)),
                          config.format, *sink);
        return kExitOk;
      }
      case Command::prototypes: {
        write_prototype_rows(config.variant, config.format, *sink);
        return kExitOk;
      }
      case Command::check:
        return run_check(config, *sink);
    }
    return kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
}

}  // namespace neutro::cli
