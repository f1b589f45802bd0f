#include "deskcalc/csv.hpp"

#include <map>
#include <stdexcept>

namespace deskcalc::csv {

namespace {

std::string strip(const std::string& s) {
    std::size_t begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    std::size_t end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

}  // namespace

std::vector<stats::Sample> read_grouped(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("csv: empty input");
    if (strip(line) != "group,value") {
        throw std::runtime_error("csv: expected header 'group,value', got '" + strip(line) + "'");
    }

    std::vector<stats::Sample> samples;
    std::map<std::string, std::size_t> index;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        std::string trimmed = strip(line);
        if (trimmed.empty()) continue;
        std::size_t comma = trimmed.find(',');
        if (comma == std::string::npos) {
            throw std::runtime_error("csv: missing value on line " + std::to_string(line_no));
        }
        std::string group = strip(trimmed.substr(0, comma));
        std::string value_text = strip(trimmed.substr(comma + 1));
        double value;
        try {
            std::size_t used = 0;
            value = std::stod(value_text, &used);
            if (used != value_text.size()) throw std::invalid_argument(value_text);
        } catch (const std::logic_error&) {
            throw std::runtime_error("csv: bad value '" + value_text + "' on line " +
                                     std::to_string(line_no));
        }
        auto [it, inserted] = index.try_emplace(group, samples.size());
        if (inserted) samples.push_back({{}, group});
        samples[it->second].values.push_back(value);
    }
    if (samples.empty()) throw std::runtime_error("csv: no data rows");
    return samples;
}

}  // namespace deskcalc::csv
