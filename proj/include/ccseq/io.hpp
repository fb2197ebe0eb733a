#pragma once

#include "ccseq/analysis.hpp"
#include "ccseq/ccc.hpp"
#include "ccseq/extend.hpp"
#include "ccseq/ratio.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ccseq {

/// On-disk description of one (possibly extended) set. Two encodings share
/// this model: a JSON document and a '+'/'-' text form whose metadata rides
/// in "# key: value" comment lines that sequence readers skip.
struct SetDocument {
    int format_version = 1;
    ConstructionDescriptor descriptor;
    int set_index = 0;
    std::optional<ExtensionPlan> extension;
    std::vector<BinarySequence> sequences;

    long long length() const {
        return sequences.empty() ? 0
                                 : static_cast<long long>(sequences[0].size());
    }
    int mate_count() const { return descriptor.mate_count(); }
};

enum class SetFileFormat { Json, Text };

SetDocument to_document(const ComplementarySet& set);
SetDocument to_document(const ExtendedSet& set);

/// Rebuild the typed set. Each throws ParseError when the document is of the
/// other kind or violates shape invariants.
ComplementarySet as_complementary_set(const SetDocument& doc);
ExtendedSet as_extended_set(const SetDocument& doc);

void write_set(const SetDocument& doc, std::ostream& out, SetFileFormat format);
SetDocument read_set(std::istream& in);

void write_set_file(const SetDocument& doc, const std::filesystem::path& path,
                    SetFileFormat format);
SetDocument read_set_file(const std::filesystem::path& path);

/// "lag,value" rows, one per lag, preceded by "# ..." comment lines and a
/// column header.
void write_profile_csv(const CorrelationProfile& profile, std::ostream& out,
                       const std::vector<std::string>& comments = {});
CorrelationProfile read_profile_csv(std::istream& in);

/// One row of the "multiplier,metric,value_fraction,value_decimal" CSV.
struct MetricRow {
    long long multiplier = 0;
    std::string metric;
    Ratio value{0};
};

void write_metric_csv(const std::vector<MetricRow>& rows, std::ostream& out,
                      const std::vector<std::string>& comments = {});

} // namespace ccseq
