#include "rankeval/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <sstream>

#include "json.hpp"

namespace rankeval {

namespace {

// Reads a line, accepting LF and CRLF. Returns false at end of input.
bool read_line(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

int parse_rank(const std::string& text, std::size_t line_no) {
  int rank = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                   rank);
  if (ec != std::errc() || ptr != text.data() + text.size() || rank < 0) {
    throw ParseError("rank must be a non-negative integer, got '" + text + "'",
                     line_no);
  }
  return rank;
}

double parse_score(const std::string& text, std::size_t line_no) {
  double score = 0.0;
  auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), score);
  if (ec != std::errc() || ptr != text.data() + text.size() ||
      !std::isfinite(score)) {
    throw ParseError("score must be a finite real, got '" + text + "'",
                     line_no);
  }
  return score;
}

std::pair<std::string, std::string> split_two(const std::string& line,
                                              std::size_t line_no) {
  const std::size_t comma = line.find(',');
  if (comma == std::string::npos || line.find(',', comma + 1) !=
      std::string::npos) {
    throw ParseError("expected exactly two comma-separated fields in '" +
                     line + "'", line_no);
  }
  return {line.substr(0, comma), line.substr(comma + 1)};
}

nlohmann::json parse_json_line(const std::string& line, std::size_t line_no) {
  nlohmann::json obj = nlohmann::json::parse(line, nullptr, false);
  if (obj.is_discarded() || !obj.is_object()) {
    throw ParseError("malformed JSON object", line_no);
  }
  return obj;
}

std::string json_string_field(const nlohmann::json& obj, const char* field,
                              std::size_t line_no) {
  if (!obj.contains(field) || !obj[field].is_string()) {
    throw ParseError(std::string("missing or non-string field '") + field +
                     "'", line_no);
  }
  return obj[field].get<std::string>();
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

RankedList parse_reference(std::istream& in, DatasetFormat format) {
  std::vector<RankedItem> items;
  std::string line;
  std::size_t line_no = 0;

  if (format == DatasetFormat::CsvRanks) {
    if (!read_line(in, line)) throw ParseError("empty reference file");
    ++line_no;
    if (line != "id,rank") {
      throw ParseError("expected header 'id,rank', got '" + line + "'",
                       line_no);
    }
    while (read_line(in, line)) {
      ++line_no;
      if (line.empty()) continue;
      auto [id, rank_text] = split_two(line, line_no);
      items.push_back(RankedItem{id, parse_rank(rank_text, line_no)});
    }
  } else {
    while (read_line(in, line)) {
      ++line_no;
      if (line.empty()) continue;
      nlohmann::json obj = parse_json_line(line, line_no);
      if (!obj.contains("rank") || !obj["rank"].is_number_integer()) {
        throw ParseError("missing or non-integer field 'rank'", line_no);
      }
      const long long rank = obj["rank"].get<long long>();
      if (rank < 0) {
        throw ParseError("rank must be non-negative", line_no);
      }
      items.push_back(RankedItem{json_string_field(obj, "id", line_no),
                                 static_cast<int>(rank)});
    }
  }
  if (items.empty()) throw ParseError("reference file has no records");

  // Re-report list invariant violations with line positions.
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (items[i].id == items[j].id) {
        const std::size_t header = format == DatasetFormat::CsvRanks ? 1 : 0;
        throw ParseError("duplicate id '" + items[i].id + "'",
                         i + 1 + header);
      }
    }
  }
  return RankedList(std::move(items));
}

Hypothesis parse_hypothesis(std::istream& in, DatasetFormat format,
                            HypothesisMode mode) {
  std::string line;
  std::size_t line_no = 0;

  if (mode == HypothesisMode::Order) {
    ExplicitOrder order;
    while (read_line(in, line)) {
      ++line_no;
      if (line.empty()) continue;
      if (format == DatasetFormat::JsonLines) {
        order.ids.push_back(
            json_string_field(parse_json_line(line, line_no), "id", line_no));
      } else {
        if (line.find(',') != std::string::npos) {
          throw ParseError("order mode expects one id per line", line_no);
        }
        order.ids.push_back(line);
      }
    }
    if (order.ids.empty()) throw ParseError("hypothesis file has no records");
    return order;
  }

  ScoreAssignment scores;
  if (format == DatasetFormat::CsvRanks) {
    if (!read_line(in, line)) throw ParseError("empty hypothesis file");
    ++line_no;
    if (line != "id,score") {
      throw ParseError("expected header 'id,score', got '" + line + "'",
                       line_no);
    }
    while (read_line(in, line)) {
      ++line_no;
      if (line.empty()) continue;
      auto [id, score_text] = split_two(line, line_no);
      scores.scores.emplace_back(id, parse_score(score_text, line_no));
    }
  } else {
    while (read_line(in, line)) {
      ++line_no;
      if (line.empty()) continue;
      nlohmann::json obj = parse_json_line(line, line_no);
      if (!obj.contains("score") || !obj["score"].is_number()) {
        throw ParseError("missing or non-numeric field 'score'", line_no);
      }
      scores.scores.emplace_back(json_string_field(obj, "id", line_no),
                                 obj["score"].get<double>());
    }
  }
  if (scores.scores.empty()) throw ParseError("hypothesis file has no records");
  return scores;
}

std::string write_reference(const RankedList& list, DatasetFormat format) {
  std::ostringstream os;
  if (format == DatasetFormat::CsvRanks) {
    os << "id,rank\n";
    for (const RankedItem& it : list.items()) {
      os << it.id << "," << it.rank << "\n";
    }
  } else {
    for (const RankedItem& it : list.items()) {
      os << nlohmann::json{{"id", it.id}, {"rank", it.rank}}.dump() << "\n";
    }
  }
  return os.str();
}

std::string write_hypothesis(const Hypothesis& hyp, DatasetFormat format) {
  std::ostringstream os;
  if (const auto* order = std::get_if<ExplicitOrder>(&hyp)) {
    for (const std::string& id : order->ids) {
      if (format == DatasetFormat::JsonLines) {
        os << nlohmann::json{{"id", id}}.dump() << "\n";
      } else {
        os << id << "\n";
      }
    }
  } else {
    const auto& scores = std::get<ScoreAssignment>(hyp).scores;
    if (format == DatasetFormat::CsvRanks) os << "id,score\n";
    for (const auto& [id, score] : scores) {
      if (format == DatasetFormat::JsonLines) {
        os << nlohmann::json{{"id", id}, {"score", score}}.dump() << "\n";
      } else {
        os << id << "," << format_double(score) << "\n";
      }
    }
  }
  return os.str();
}

namespace {

// Rounds to 3 decimals, half to even; display only, stored values keep
// full precision.
std::string render_3dp(double v) {
  const double scaled = v * 1000.0;
  double rounded = std::nearbyint(scaled);
  if (std::abs(scaled - std::trunc(scaled)) == 0.5) {
    // Exactly representable half: pick the even neighbor.
    const double floor_v = std::floor(scaled);
    rounded = (std::fmod(floor_v, 2.0) == 0.0) ? floor_v : floor_v + 1.0;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", rounded / 1000.0);
  return buf;
}

std::vector<std::string> metric_columns(
    const std::vector<MetricReport>& reports) {
  std::vector<std::string> columns;
  for (const MetricReport& r : reports) {
    for (const auto& [metric, value] : r.scores) {
      if (std::find(columns.begin(), columns.end(), metric) ==
          columns.end()) {
        columns.push_back(metric);
      }
    }
  }
  return columns;
}

const MetricValue* find_score(const MetricReport& report,
                              const std::string& metric) {
  for (const auto& [name, value] : report.scores) {
    if (name == metric) return &value;
  }
  return nullptr;
}

}  // namespace

std::string write_report(const std::vector<MetricReport>& reports,
                         ReportFormat format) {
  if (reports.empty()) throw InvalidInput("write_report: empty report");
  const std::vector<std::string> columns = metric_columns(reports);

  if (format == ReportFormat::Json) {
    nlohmann::json rows = nlohmann::json::array();
    for (const MetricReport& r : reports) {
      nlohmann::json scores = nlohmann::json::object();
      for (const auto& [metric, value] : r.scores) {
        scores[metric] =
            value.is_defined() ? nlohmann::json(value.value()) : nullptr;
      }
      rows.push_back({{"name", r.name}, {"scores", scores}});
    }
    return nlohmann::json{{"rows", rows}}.dump() + "\n";
  }

  if (format == ReportFormat::Csv) {
    std::ostringstream os;
    os << "name";
    for (const std::string& c : columns) os << "," << c;
    os << "\n";
    for (const MetricReport& r : reports) {
      os << r.name;
      for (const std::string& c : columns) {
        const MetricValue* v = find_score(r, c);
        os << ",";
        if (v && v->is_defined()) os << format_double(v->value());
        else os << "null";
      }
      os << "\n";
    }
    return os.str();
  }

  // Table
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{"hypothesis"};
  header.insert(header.end(), columns.begin(), columns.end());
  cells.push_back(header);
  for (const MetricReport& r : reports) {
    std::vector<std::string> row{r.name};
    for (const std::string& c : columns) {
      const MetricValue* v = find_score(r, c);
      if (!v) row.push_back("-");
      else if (v->is_defined()) row.push_back(render_3dp(v->value()));
      else row.push_back("nan");
    }
    cells.push_back(row);
  }
  std::vector<std::size_t> widths(header.size(), 0);
  for (const auto& row : cells) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      widths[i] = std::max(widths[i], row[i].size());
    }
  }
  std::ostringstream os;
  for (const auto& row : cells) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << "  ";
      os << row[i];
      if (i + 1 < row.size()) {
        os << std::string(widths[i] - row[i].size(), ' ');
      }
    }
    os << "\n";
  }
  return os.str();
}

std::string write_sweep(const std::vector<SweepCell>& cells) {
  std::ostringstream os;
  os << "step,metric,score\n";
  for (const SweepCell& c : cells) {
    os << c.step << "," << c.metric << ",";
    if (c.score.is_defined()) os << format_double(c.score.value());
    else os << "null";
    os << "\n";
  }
  return os.str();
}

std::string write_curves(const RankedList& list,
                         const std::vector<CurveVariant>& variants) {
  std::ostringstream os;
  os << "position,variant,cost\n";
  for (CurveVariant variant : variants) {
    for (const CurvePoint& p : cost_curve(list, variant)) {
      os << p.position << "," << curve_variant_name(variant) << ","
         << format_double(p.cost) << "\n";
    }
  }
  return os.str();
}

}  // namespace rankeval
