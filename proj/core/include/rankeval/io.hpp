#ifndef RANKEVAL_IO_HPP
#define RANKEVAL_IO_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "rankeval/baselines.hpp"
#include "rankeval/core.hpp"
#include "rankeval/datagen.hpp"
#include "rankeval/rankdcg.hpp"

namespace rankeval {

enum class DatasetFormat { CsvRanks, JsonLines };
enum class HypothesisMode { Order, Scores };

/// CsvRanks: header "id,rank", one record per line; JsonLines: one object
/// {"id": string, "rank": integer} per line. UTF-8, LF or CRLF.
RankedList parse_reference(std::istream& in, DatasetFormat format);

/// Order mode: one id per line (JsonLines: {"id": string}), top first.
/// Scores mode: header "id,score" (JsonLines: {"id", "score"}). Ties are
/// preserved; id/reference consistency is checked at pairing, not here.
Hypothesis parse_hypothesis(std::istream& in, DatasetFormat format,
                            HypothesisMode mode);

std::string write_reference(const RankedList& list, DatasetFormat format);
std::string write_hypothesis(const Hypothesis& hyp, DatasetFormat format);

/// One report row: a named hypothesis with its metric scores in display
/// order.
struct MetricReport {
  std::string name;
  std::vector<std::pair<std::string, MetricValue>> scores;
};

enum class ReportFormat { Table, Csv, Json };

/// Table: aligned text matrix, values rounded half-to-even to 3 decimals,
/// Undefined rendered as "nan". Csv/Json carry full precision and render
/// Undefined as null.
std::string write_report(const std::vector<MetricReport>& reports,
                         ReportFormat format);

/// CSV with header "step,metric,score"; undefined scores render as null.
std::string write_sweep(const std::vector<SweepCell>& cells);

/// CSV with header "position,variant,cost".
std::string write_curves(const RankedList& list,
                         const std::vector<CurveVariant>& variants);

/// Shortest round-trip decimal form of a double.
std::string format_double(double v);

}  // namespace rankeval

#endif  // RANKEVAL_IO_HPP
