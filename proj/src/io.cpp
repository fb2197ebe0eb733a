#include "ccseq/io.hpp"

#include "ccseq/config.hpp"
#include "ccseq/error.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <utility>

namespace ccseq {

namespace {

using nlohmann::json;

std::string extension_to_text(const ExtensionPlan& plan) {
    if (const auto* cdos = std::get_if<CdosPlan>(&plan)) {
        return "cdos depth=" + std::to_string(cdos->depth);
    }
    if (const auto* nested = std::get_if<NestingPlan>(&plan)) {
        std::string out = "barker factors=";
        for (std::size_t i = 0; i < nested->factors.size(); ++i) {
            if (i > 0) {
                out += ',';
            }
            out += std::to_string(nested->factors[i].length) + ':' +
                   std::to_string(nested->factors[i].variant);
        }
        return out;
    }
    return "envelope " + std::get<EnvelopePlan>(plan).envelope.to_string();
}

ExtensionPlan extension_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string kind;
    in >> kind;
    if (kind == "cdos") {
        std::string body;
        in >> body;
        if (body.rfind("depth=", 0) != 0) {
            throw ParseError("malformed cdos extension: " + text);
        }
        return CdosPlan{std::stoi(body.substr(6))};
    }
    if (kind == "barker") {
        std::string body;
        in >> body;
        if (body.rfind("factors=", 0) != 0) {
            throw ParseError("malformed barker extension: " + text);
        }
        std::vector<BarkerId> ids;
        std::istringstream list(body.substr(8));
        std::string item;
        while (std::getline(list, item, ',')) {
            const auto colon = item.find(':');
            if (colon == std::string::npos) {
                throw ParseError("malformed factor '" + item + "'");
            }
            ids.push_back(BarkerId{std::stoi(item.substr(0, colon)),
                                   std::stoi(item.substr(colon + 1))});
        }
        return make_nesting_plan(ids);
    }
    if (kind == "envelope") {
        std::string body;
        in >> body;
        return EnvelopePlan{BinarySequence::parse(body)};
    }
    throw ParseError("unknown extension kind: " + text);
}

json extension_to_json(const ExtensionPlan& plan) {
    json j;
    if (const auto* cdos = std::get_if<CdosPlan>(&plan)) {
        j["kind"] = "cdos";
        j["depth"] = cdos->depth;
    } else if (const auto* nested = std::get_if<NestingPlan>(&plan)) {
        j["kind"] = "barker";
        json factors = json::array();
        for (const BarkerId& id : nested->factors) {
            factors.push_back({id.length, id.variant});
        }
        j["factors"] = std::move(factors);
    } else {
        j["kind"] = "envelope";
        j["envelope"] = std::get<EnvelopePlan>(plan).envelope.to_string();
    }
    return j;
}

ExtensionPlan extension_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "cdos") {
        return CdosPlan{j.at("depth").get<int>()};
    }
    if (kind == "barker") {
        std::vector<BarkerId> ids;
        for (const auto& f : j.at("factors")) {
            ids.push_back(BarkerId{f.at(0).get<int>(), f.at(1).get<int>()});
        }
        return make_nesting_plan(ids);
    }
    if (kind == "envelope") {
        return EnvelopePlan{
            BinarySequence::parse(j.at("envelope").get<std::string>())};
    }
    throw ParseError("unknown extension kind: " + kind);
}

void validate_document(const SetDocument& doc) {
    if (doc.format_version != 1) {
        throw ParseError("unsupported format_version " +
                         std::to_string(doc.format_version));
    }
    if (doc.descriptor.m < 1) {
        throw ParseError("document needs m >= 1");
    }
    if (doc.descriptor.n_stages < 0) {
        throw ParseError("document needs n_stages >= 0");
    }
    const int M = doc.descriptor.mate_count();
    if (static_cast<int>(doc.sequences.size()) != M) {
        throw ParseError("expected " + std::to_string(M) + " sequences, got " +
                         std::to_string(doc.sequences.size()));
    }
    long long expected = doc.descriptor.length();
    if (doc.extension) {
        expected *= plan_multiplier(*doc.extension);
    }
    for (const BinarySequence& s : doc.sequences) {
        if (static_cast<long long>(s.size()) != expected) {
            throw ParseError("sequence length " + std::to_string(s.size()) +
                             " does not match the declared shape (" +
                             std::to_string(expected) + ")");
        }
    }
    if (doc.set_index < 0 || doc.set_index >= M) {
        throw ParseError("set_index out of range");
    }
}

void write_text(const SetDocument& doc, std::ostream& out) {
    out << "# generated_by: " << kVersion << '\n';
    out << "# format_version: " << doc.format_version << '\n';
    out << "# m: " << doc.descriptor.m << '\n';
    out << "# n_stages: " << doc.descriptor.n_stages << '\n';
    out << "# set_index: " << doc.set_index << '\n';
    out << "# delay_order: " << doc.descriptor.delay_order << '\n';
    if (doc.extension) {
        out << "# extension: " << extension_to_text(*doc.extension) << '\n';
    }
    for (const BinarySequence& s : doc.sequences) {
        out << s.to_string() << '\n';
    }
}

SetDocument read_text(std::istream& in) {
    SetDocument doc;
    bool have_m = false;
    bool have_stages = false;
    bool have_index = false;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            throw ParseError("carriage returns are not allowed");
        }
        if (line.empty()) {
            throw ParseError("empty lines are not allowed in sequence files");
        }
        if (line[0] == '#') {
            const auto colon = line.find(':');
            if (colon == std::string::npos) {
                continue; // free-form comment
            }
            std::string key = line.substr(1, colon - 1);
            key.erase(0, key.find_first_not_of(' '));
            key.erase(key.find_last_not_of(' ') + 1);
            std::string value = line.substr(colon + 1);
            value.erase(0, value.find_first_not_of(' '));
            if (key == "format_version") {
                doc.format_version = std::stoi(value);
            } else if (key == "m") {
                doc.descriptor.m = std::stoi(value);
                have_m = true;
            } else if (key == "n_stages") {
                doc.descriptor.n_stages = std::stoi(value);
                have_stages = true;
            } else if (key == "set_index") {
                doc.set_index = std::stoi(value);
                have_index = true;
            } else if (key == "delay_order") {
                doc.descriptor.delay_order = value;
            } else if (key == "extension") {
                doc.extension = extension_from_text(value);
            }
            // unknown keys (generated_by among them) are skipped
            continue;
        }
        doc.sequences.push_back(BinarySequence::parse(line));
    }
    if (!have_m || !have_stages || !have_index) {
        throw ParseError("missing required header (m, n_stages, set_index)");
    }
    validate_document(doc);
    return doc;
}

void write_json(const SetDocument& doc, std::ostream& out) {
    json j;
    j["format_version"] = doc.format_version;
    j["m"] = doc.descriptor.m;
    j["n_stages"] = doc.descriptor.n_stages;
    j["length"] = doc.length();
    j["set_index"] = doc.set_index;
    j["descriptor"] = {{"hadamard_order", doc.descriptor.mate_count()},
                       {"stages", doc.descriptor.n_stages},
                       {"delay_order", doc.descriptor.delay_order}};
    if (doc.extension) {
        j["extension"] = extension_to_json(*doc.extension);
    }
    json seqs = json::array();
    for (const BinarySequence& s : doc.sequences) {
        seqs.push_back(s.to_string());
    }
    j["sequences"] = std::move(seqs);
    out << j.dump(2) << '\n';
}

SetDocument read_json(std::istream& in) {
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    try {
        SetDocument doc;
        doc.format_version = j.at("format_version").get<int>();
        doc.descriptor.m = j.at("m").get<int>();
        doc.descriptor.n_stages = j.at("n_stages").get<int>();
        doc.set_index = j.at("set_index").get<int>();
        if (j.contains("descriptor")) {
            const auto& d = j.at("descriptor");
            doc.descriptor.delay_order =
                d.value("delay_order", std::string("natural"));
            if (d.contains("hadamard_order") &&
                d.at("hadamard_order").get<int>() !=
                    doc.descriptor.mate_count()) {
                throw ParseError("descriptor hadamard_order contradicts m");
            }
            if (d.contains("stages") &&
                d.at("stages").get<int>() != doc.descriptor.n_stages) {
                throw ParseError("descriptor stages contradicts n_stages");
            }
        }
        if (j.contains("extension")) {
            doc.extension = extension_from_json(j.at("extension"));
        }
        for (const auto& s : j.at("sequences")) {
            doc.sequences.push_back(
                BinarySequence::parse(s.get<std::string>()));
        }
        if (j.contains("length") &&
            j.at("length").get<long long>() != doc.length()) {
            throw ParseError("declared length does not match sequences");
        }
        validate_document(doc);
        return doc;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed set document: ") + e.what());
    }
}

} // namespace

SetDocument to_document(const ComplementarySet& set) {
    return SetDocument{1, set.descriptor, set.set_index, std::nullopt,
                       set.sequences};
}

SetDocument to_document(const ExtendedSet& set) {
    return SetDocument{1, set.base, set.set_index, set.plan, set.sequences};
}

ComplementarySet as_complementary_set(const SetDocument& doc) {
    if (doc.extension) {
        throw ParseError("document describes an extended set");
    }
    return ComplementarySet{doc.descriptor, doc.set_index, doc.sequences};
}

ExtendedSet as_extended_set(const SetDocument& doc) {
    if (!doc.extension) {
        throw ParseError("document describes a base set, not an extension");
    }
    return ExtendedSet{doc.descriptor, doc.set_index, *doc.extension,
                       doc.sequences};
}

void write_set(const SetDocument& doc, std::ostream& out,
               SetFileFormat format) {
    if (format == SetFileFormat::Json) {
        write_json(doc, out);
    } else {
        write_text(doc, out);
    }
}

SetDocument read_set(std::istream& in) {
    // JSON documents open with '{'; everything else is the text form.
    const int first = in.peek();
    if (first == '{') {
        return read_json(in);
    }
    return read_text(in);
}

void write_set_file(const SetDocument& doc, const std::filesystem::path& path,
                    SetFileFormat format) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot open " + path.string() + " for writing");
    }
    write_set(doc, out, format);
    out.flush();
    if (!out) {
        throw Error("write failed: " + path.string());
    }
}

SetDocument read_set_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open " + path.string());
    }
    return read_set(in);
}

void write_profile_csv(const CorrelationProfile& profile, std::ostream& out,
                       const std::vector<std::string>& comments) {
    out << "# generated_by: " << kVersion << '\n';
    switch (profile.kind()) {
    case ProfileKind::Sac:
        out << "# kind: sac\n";
        break;
    case ProfileKind::Scc:
        out << "# kind: scc\n";
        break;
    case ProfileKind::SinglePair:
        out << "# kind: pair\n";
        break;
    }
    for (const std::string& c : comments) {
        out << "# " << c << '\n';
    }
    out << "lag,value\n";
    for (long long lag = profile.min_lag(); lag <= profile.max_lag(); ++lag) {
        out << lag << ',' << profile.at(lag) << '\n';
    }
}

CorrelationProfile read_profile_csv(std::istream& in) {
    std::string line;
    ProfileKind kind = ProfileKind::SinglePair;
    bool saw_header = false;
    std::vector<long long> values;
    long long min_lag = 0;
    long long expected_lag = 0;
    while (std::getline(in, line)) {
        if (line.empty()) {
            throw ParseError("empty line in profile CSV");
        }
        if (line[0] == '#') {
            if (line.rfind("# kind: ", 0) == 0) {
                const std::string k = line.substr(8);
                kind = (k == "sac")   ? ProfileKind::Sac
                       : (k == "scc") ? ProfileKind::Scc
                                      : ProfileKind::SinglePair;
            }
            continue;
        }
        if (!saw_header) {
            if (line != "lag,value") {
                throw ParseError("profile CSV must start with 'lag,value'");
            }
            saw_header = true;
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos) {
            throw ParseError("malformed CSV row: " + line);
        }
        const long long lag = std::stoll(line.substr(0, comma));
        const long long value = std::stoll(line.substr(comma + 1));
        if (values.empty()) {
            min_lag = lag;
        } else if (lag != expected_lag) {
            throw ParseError("non-contiguous lags in profile CSV");
        }
        expected_lag = lag + 1;
        values.push_back(value);
    }
    if (values.empty()) {
        throw ParseError("profile CSV has no data rows");
    }
    return CorrelationProfile(min_lag, std::move(values), kind);
}

void write_metric_csv(const std::vector<MetricRow>& rows, std::ostream& out,
                      const std::vector<std::string>& comments) {
    out << "# generated_by: " << kVersion << '\n';
    for (const std::string& c : comments) {
        out << "# " << c << '\n';
    }
    out << "multiplier,metric,value_fraction,value_decimal\n";
    for (const MetricRow& row : rows) {
        out << row.multiplier << ',' << row.metric << ','
            << format_ratio(row.value) << ','
            << format_ratio_decimal(row.value) << '\n';
    }
}

} // namespace ccseq
