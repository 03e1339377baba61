#include "pecr/bpa_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace pecr {

namespace {

std::string format_number(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

}  // namespace

MassFunction bpa_from_json_string(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("BPA document is not valid JSON: ") + e.what());
    }
    if (!doc.contains("frame") || !doc["frame"].is_array())
        throw std::invalid_argument("BPA document needs a 'frame' array of labels");
    if (!doc.contains("masses") || !doc["masses"].is_object())
        throw std::invalid_argument("BPA document needs a 'masses' object");
    std::vector<std::string> labels;
    for (const auto& l : doc["frame"]) labels.push_back(l.get<std::string>());
    Frame frame(std::move(labels));
    std::vector<double> masses(frame.subset_count(), 0.0);
    for (const auto& [key, value] : doc["masses"].items()) {
        if (!value.is_number())
            throw std::invalid_argument("mass for '" + key + "' is not a number");
        masses[frame.parse_subset(key)] += value.get<double>();
    }
    return {frame, std::move(masses)};
}

MassFunction bpa_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open BPA file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return bpa_from_json_string(ss.str());
}

std::string bpa_to_json_string(const MassFunction& m) {
    nlohmann::json masses = nlohmann::json::object();
    for (std::uint32_t f = 0; f < m.masses().size(); ++f)
        if (m[f] != 0.0)
            masses[m.frame().subset_name(f)] = std::stod(format_number(m[f]));
    nlohmann::json doc;
    doc["frame"] = m.frame().labels();
    doc["masses"] = masses;
    return doc.dump(2);
}

}  // namespace pecr
