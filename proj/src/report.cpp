#include "stockpoly/report.hpp"

#include <algorithm>
#include <sstream>

namespace stockpoly {
namespace {

using nlohmann::json;

json subset_json(Subset s) { return s.elements(); }

json facets_json(const PositroidPolytope& poly, const std::vector<Facet>& facets) {
  json out = json::array();
  for (const auto& f : facets) {
    json verts = json::array();
    for (std::size_t v : f.vertices) verts.push_back(subset_json(poly.vertices[v]));
    out.push_back({{"normal", f.normal}, {"offset", f.offset}, {"vertices", verts}});
  }
  return out;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace

AnalysisReport analyze(const PriceTable& table, Date ref_date, Date target_date, bool with_facets) {
  const auto series = rank_series(table, ref_date, target_date);
  AnalysisReport r;
  r.ref_date = ref_date;
  r.target_date = target_date;
  for (std::size_t s : series.front().order) r.tickers.push_back(table.tickers()[s]);
  const Permutation perm = permutation_at(table, ref_date, target_date);
  r.state = decorate(perm, table, ref_date, target_date);
  r.crossings = crossing_stream(table, ref_date, target_date);
  r.necklace = necklace_from_decorated(r.state);
  r.lift = affine_lift(r.state);
  r.rank_terms = dimension_terms(r.state);
  r.positroid = positroid_from_necklace(r.necklace);
  r.cell_dimension = cell_dimension(r.state);
  const PositroidPolytope poly = polytope_from_positroid(r.positroid);
  r.polytope.vertex_count = poly.vertices.size();
  r.polytope.affine_dimension = polytope_dimension(poly);
  if (with_facets) r.polytope.facets = enumerate_facets(poly);
  r.components = connected_components(r.positroid);
  return r;
}

nlohmann::json to_json(const AnalysisReport& r, const PriceTable& table) {
  json doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["ref_date"] = format_iso_date(r.ref_date);
  doc["target_date"] = format_iso_date(r.target_date);
  doc["tickers"] = r.tickers;
  doc["permutation"] = r.state.perm().images();

  json decorations = json::array();
  for (int i : r.state.perm().fixed_points())
    decorations.push_back({{"point", i}, {"ticker", r.tickers[static_cast<std::size_t>(i - 1)]}, {"orientation", to_string(r.state.color(i))}});
  doc["decorations"] = decorations;

  json crossings = json::array();
  for (const auto& e : r.crossings)
    crossings.push_back({{"date", format_iso_date(e.date)},
                         {"seq", e.seq},
                         {"position", e.position},
                         {"stocks", {table.tickers()[e.lower_stock], table.tickers()[e.upper_stock]}}});
  doc["crossings"] = crossings;

  json necklace = json::array();
  for (Subset t : r.necklace.terms) necklace.push_back(subset_json(t));
  doc["necklace"] = necklace;
  doc["k"] = r.necklace.k;
  doc["affine_lift"] = r.lift.values();
  doc["rank_terms"] = r.rank_terms;

  json bases = json::array();
  for (Subset b : r.positroid.bases()) bases.push_back(subset_json(b));
  doc["bases"] = bases;
  doc["cell_dimension"] = r.cell_dimension;

  json poly = {{"vertex_count", r.polytope.vertex_count}, {"affine_dimension", r.polytope.affine_dimension}};
  if (r.polytope.facets) {
    poly["facet_count"] = r.polytope.facets->size();
    poly["facets"] = facets_json(polytope_from_positroid(r.positroid), *r.polytope.facets);
  }
  doc["polytope"] = poly;
  doc["components"] = r.components;
  return doc;
}

std::string canonical_json(const AnalysisReport& report, const PriceTable& table) {
  return to_json(report, table).dump(2) + "\n";
}

std::string to_text(const AnalysisReport& r, const PriceTable& table) {
  std::ostringstream out;
  out << "reference " << format_iso_date(r.ref_date) << "  target " << format_iso_date(r.target_date) << "\n";
  out << "points:";
  for (std::size_t i = 0; i < r.tickers.size(); ++i) out << ' ' << (i + 1) << '=' << r.tickers[i];
  out << "\n";
  out << "permutation       " << to_string(r.state.perm()) << "\n";
  out << "decorated         " << to_string(r.state) << "\n";
  out << "crossings         " << r.crossings.size() << "\n";
  for (const auto& e : r.crossings)
    out << "  " << format_iso_date(e.date) << " #" << e.seq << "  s" << e.position << "  " << table.tickers()[e.lower_stock] << '/'
        << table.tickers()[e.upper_stock] << "\n";
  out << "necklace          " << to_string(r.necklace) << "\n";
  out << "k                 " << r.necklace.k << "\n";
  out << "affine lift       {";
  for (std::size_t i = 0; i < r.lift.values().size(); ++i) out << (i ? "," : "") << r.lift.values()[i];
  out << "}\n";
  int sum = 0;
  out << "rank terms        ";
  for (std::size_t i = 0; i < r.rank_terms.size(); ++i) {
    out << (i ? " + " : "") << r.rank_terms[i];
    sum += r.rank_terms[i];
  }
  out << " = " << sum << "\n";
  out << "cell dimension    " << sum << " - " << r.necklace.k * r.necklace.k << " = " << r.cell_dimension << "\n";
  out << pad("bases (" + std::to_string(r.positroid.bases().size()) + ")", 18);
  for (std::size_t j = 0; j < r.positroid.bases().size(); ++j) out << (j ? " " : "") << to_string(r.positroid.bases()[j]);
  out << "\n";
  out << "polytope          " << r.polytope.vertex_count << " vertices, affine dimension " << r.polytope.affine_dimension;
  if (r.polytope.facets) out << ", " << r.polytope.facets->size() << " facets";
  out << "\n";
  out << "components        ";
  for (std::size_t b = 0; b < r.components.size(); ++b) {
    out << (b ? " {" : "{");
    for (std::size_t j = 0; j < r.components[b].size(); ++j) out << (j ? "," : "") << r.components[b][j];
    out << '}';
  }
  out << "\n";
  return out.str();
}

std::vector<std::string> check_report(const nlohmann::json& doc) {
  std::vector<std::string> problems;
  if (doc.value("schema_version", 0) != kReportSchemaVersion) problems.push_back("schema_version is not 1");

  const auto images = doc.at("permutation").get<std::vector<int>>();
  Permutation perm{images};
  std::vector<std::optional<Orientation>> colors(images.size());
  for (const auto& d : doc.at("decorations")) {
    const int point = d.at("point").get<int>();
    if (point < 1 || point > perm.size()) throw std::invalid_argument("decoration point out of range");
    const auto o = d.at("orientation").get<std::string>();
    if (o != "RIGHT" && o != "LEFT") throw std::invalid_argument("unknown orientation " + o);
    colors[static_cast<std::size_t>(point - 1)] = o == "RIGHT" ? Orientation::Right : Orientation::Left;
  }
  const DecoratedPermutation dp{perm, std::move(colors)};

  auto expect = [&](const char* key, const json& derived) {
    if (!doc.contains(key)) problems.push_back(std::string("missing field ") + key);
    else if (doc.at(key) != derived) problems.push_back(std::string(key) + " disagrees with the permutation and decorations");
  };
  const GrassmannNecklace nk = necklace_from_decorated(dp);
  json necklace = json::array();
  for (Subset t : nk.terms) necklace.push_back(subset_json(t));
  expect("necklace", necklace);
  expect("k", nk.k);
  expect("affine_lift", affine_lift(dp).values());
  expect("rank_terms", dimension_terms(dp));
  const Positroid m = positroid_from_necklace(nk);
  json bases = json::array();
  for (Subset b : m.bases()) bases.push_back(subset_json(b));
  expect("bases", bases);
  expect("cell_dimension", cell_dimension(dp));
  expect("components", connected_components(m));

  if (doc.contains("necklace")) {
    for (const auto& term : doc.at("necklace"))
      if (term.size() != static_cast<std::size_t>(doc.value("k", -1))) {
        problems.push_back("necklace term size differs from k");
        break;
      }
  }
  if (doc.contains("polytope")) {
    const auto& poly = doc.at("polytope");
    if (poly.value("vertex_count", std::size_t{0}) != m.bases().size()) problems.push_back("polytope vertex_count differs from the basis count");
    const PositroidPolytope p = polytope_from_positroid(m);
    if (poly.value("affine_dimension", -1) != polytope_dimension(p)) problems.push_back("polytope affine_dimension disagrees");
    if (poly.contains("facet_count") && p.n <= kMaxFacetGround &&
        poly.at("facet_count").get<std::size_t>() != enumerate_facets(p).size())
      problems.push_back("polytope facet_count disagrees");
  }
  if (doc.contains("crossings") && doc.contains("permutation")) {
    Permutation rank_map = Permutation::identity(perm.size());
    for (const auto& e : doc.at("crossings"))
      rank_map = adjacent_transposition(perm.size(), e.at("position").get<int>()) * rank_map;
    if (rank_map != perm) problems.push_back("crossings do not compose to the permutation");
  }
  return problems;
}

std::vector<MarketChainStep> market_chain(const PriceTable& table, Date ref_date, Date end_date) {
  const auto series = rank_series(table, ref_date, end_date);
  const auto& ref_order = series.front().order;
  const std::size_t ref = table.date_index(ref_date);
  const int n = static_cast<int>(table.stock_count());

  auto decorate_at = [&](const Permutation& perm, Date when) {
    const std::size_t d = table.date_index(when);
    std::vector<std::optional<Orientation>> colors(static_cast<std::size_t>(n));
    for (int i : perm.fixed_points()) {
      const std::size_t stock = ref_order[static_cast<std::size_t>(i - 1)];
      colors[static_cast<std::size_t>(i - 1)] = table.price(d, stock) >= table.price(ref, stock) ? Orientation::Right : Orientation::Left;
    }
    return DecoratedPermutation{perm, std::move(colors)};
  };

  std::vector<MarketChainStep> chain;
  Permutation rank_map = Permutation::identity(n);
  auto start = decorate_at(rank_map, ref_date);
  const int start_dim = cell_dimension(start);
  chain.push_back({std::nullopt, std::move(start), start_dim});
  for (std::size_t d = 1; d < series.size(); ++d) {
    for (const auto& e : decompose_transition(series[d - 1], series[d])) {
      rank_map = adjacent_transposition(n, e.position) * rank_map;
      auto state = decorate_at(rank_map, e.date);
      const int dim = cell_dimension(state);
      chain.push_back({e, std::move(state), dim});
    }
  }
  return chain;
}

std::string chain_to_text(const std::vector<MarketChainStep>& chain, const PriceTable& table, Date ref_date) {
  std::ostringstream out;
  out << pad("step", 6) << pad("date", 12) << pad("seq", 5) << pad("crossing", 16) << pad("state", 20) << "dim\n";
  for (std::size_t s = 0; s < chain.size(); ++s) {
    const auto& step = chain[s];
    std::string date = format_iso_date(ref_date), seq = "-", crossing = "-";
    if (step.event) {
      date = format_iso_date(step.event->date);
      seq = std::to_string(step.event->seq);
      crossing = "s" + std::to_string(step.event->position) + " " + table.tickers()[step.event->lower_stock] + "/" +
                 table.tickers()[step.event->upper_stock];
    }
    std::string dim = std::to_string(step.dimension);
    if (s > 0 && step.dimension < chain[s - 1].dimension) dim += "  (drop)";
    out << pad(std::to_string(s), 6) << pad(date, 12) << pad(seq, 5) << pad(crossing, 16) << pad(to_string(step.state), 20) << dim
        << "\n";
  }
  return out.str();
}

}  // namespace stockpoly
