#include "gaitlab/table_io.hpp"

#include "gaitlab/error.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gaitlab {

namespace {

constexpr std::string_view k_schema_prefix = "# schema=";

std::vector<std::string_view> split_commas(std::string_view line)
{
   std::vector<std::string_view> out;
   std::size_t start = 0;
   while(true) {
      const auto comma = line.find(',', start);
      out.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
      if(comma == std::string_view::npos) break;
      start = comma + 1;
   }
   return out;
}

std::vector<std::string_view> split_lines(std::string_view text)
{
   std::vector<std::string_view> out;
   while(!text.empty()) {
      const auto eol = text.find('\n');
      auto line      = text.substr(0, eol);
      if(!line.empty() && line.back() == '\r') line.remove_suffix(1);
      out.push_back(line);
      if(eol == std::string_view::npos) break;
      text = text.substr(eol + 1);
   }
   return out;
}

double parse_number(std::string_view s, std::size_t line_no)
{
   double v       = 0.0;
   const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
   if(res.ec != std::errc{} || res.ptr != s.data() + s.size())
      throw MalformedLine(line_no, "bad number '" + std::string(s) + "'");
   return v;
}

void check_id(std::string_view id)
{
   if(id.find_first_of(",\n\r") != std::string_view::npos)
      throw std::invalid_argument("source_id may not contain commas or newlines: " + std::string(id));
}

} // namespace

std::string format_double(double v)
{
   char buf[64];
   const auto res = std::to_chars(buf, buf + sizeof(buf), v);
   return std::string(buf, res.ptr);
}

std::string write_video_csv(std::span<const VideoRecord> rows, bool with_labels)
{
   std::string out;
   out += std::string(k_schema_prefix)
          + (rows.empty() ? schema_fingerprint() : rows.front().features.schema_fingerprint) + "\n";
   out += with_labels ? "source_id,label" : "source_id";
   for(const auto& n : video_feature_names()) out += "," + n;
   out += '\n';
   for(const auto& r : rows) {
      if(!rows.empty() && r.features.schema_fingerprint != rows.front().features.schema_fingerprint)
         throw SchemaMismatch(rows.front().features.schema_fingerprint, r.features.schema_fingerprint);
      check_id(r.features.source_id);
      out += r.features.source_id;
      if(with_labels) out += "," + (r.label ? std::string(label_name(*r.label)) : std::string{});
      for(const double v : r.features.mean) out += "," + format_double(v);
      for(const double v : r.features.std) out += "," + format_double(v);
      out += '\n';
   }
   return out;
}

void write_video_csv_file(const std::filesystem::path& path, std::span<const VideoRecord> rows, bool with_labels)
{
   write_text_file(path, write_video_csv(rows, with_labels));
}

std::vector<VideoRecord> read_video_csv(std::string_view text)
{
   const auto lines = split_lines(text);
   std::string fingerprint = schema_fingerprint();
   std::size_t i = 0;
   for(; i < lines.size() && (lines[i].empty() || lines[i].starts_with("#")); ++i)
      if(lines[i].starts_with(k_schema_prefix)) fingerprint = std::string(lines[i].substr(k_schema_prefix.size()));
   if(i == lines.size()) throw MalformedLine(i, "missing header");

   const auto header     = split_commas(lines[i]);
   const auto& names     = video_feature_names();
   const bool has_label  = header.size() == names.size() + 2;
   const std::size_t off = has_label ? 2 : 1;
   if(header.size() != names.size() + off || header[0] != "source_id" || (has_label && header[1] != "label"))
      throw MalformedLine(i + 1, "unexpected header");
   for(std::size_t c = 0; c < names.size(); ++c)
      if(header[c + off] != names[c]) throw MalformedLine(i + 1, "unexpected column " + std::string(header[c + off]));

   std::vector<VideoRecord> out;
   for(++i; i < lines.size(); ++i) {
      if(lines[i].empty()) continue;
      const std::size_t line_no = i + 1;
      const auto cells = split_commas(lines[i]);
      if(cells.size() != header.size()) throw MalformedLine(line_no, "wrong number of columns");
      VideoRecord r;
      r.features.source_id          = std::string(cells[0]);
      r.features.schema_fingerprint = fingerprint;
      if(has_label && !cells[1].empty()) {
         r.label = label_from_name(cells[1]);
         if(!r.label) throw MalformedLine(line_no, "unknown label '" + std::string(cells[1]) + "'");
      }
      for(std::size_t d = 0; d < k_frame_dims; ++d) {
         r.features.mean[d] = parse_number(cells[off + d], line_no);
         r.features.std[d]  = parse_number(cells[off + k_frame_dims + d], line_no);
      }
      out.push_back(std::move(r));
   }
   return out;
}

std::vector<VideoRecord> read_video_csv_file(const std::filesystem::path& path)
{
   return read_video_csv(read_text_file(path));
}

std::vector<LabeledVideo> labeled_only(std::span<const VideoRecord> rows)
{
   std::vector<LabeledVideo> out;
   for(const auto& r : rows)
      if(r.label) out.push_back({r.features, *r.label});
   return out;
}

std::string write_manifest(std::span<const ManifestEntry> entries)
{
   std::string out = "source_id,label,seed\n";
   for(const auto& e : entries) {
      check_id(e.source_id);
      out += e.source_id + "," + std::string(label_name(e.label)) + "," + std::to_string(e.seed) + "\n";
   }
   return out;
}

std::vector<ManifestEntry> read_manifest(std::string_view text)
{
   const auto lines = split_lines(text);
   if(lines.empty() || lines[0] != "source_id,label,seed") throw MalformedLine(1, "unexpected manifest header");
   std::vector<ManifestEntry> out;
   for(std::size_t i = 1; i < lines.size(); ++i) {
      if(lines[i].empty()) continue;
      const auto cells = split_commas(lines[i]);
      if(cells.size() != 3) throw MalformedLine(i + 1, "expected 3 columns");
      ManifestEntry e;
      e.source_id  = std::string(cells[0]);
      const auto l = label_from_name(cells[1]);
      if(!l) throw MalformedLine(i + 1, "unknown label '" + std::string(cells[1]) + "'");
      e.label        = *l;
      const auto res = std::from_chars(cells[2].data(), cells[2].data() + cells[2].size(), e.seed);
      if(res.ec != std::errc{} || res.ptr != cells[2].data() + cells[2].size())
         throw MalformedLine(i + 1, "bad seed");
      out.push_back(std::move(e));
   }
   return out;
}

std::string write_predictions_csv(const TrainedModel& model,
                                  std::span<const std::string> source_ids,
                                  std::span<const Prediction> predictions)
{
   std::string out = "source_id,predicted";
   for(const auto l : model.class_set) out += ",score_" + std::string(label_name(l));
   out += '\n';
   for(std::size_t i = 0; i < predictions.size(); ++i) {
      out += source_ids[i] + "," + std::string(label_name(predictions[i].label));
      for(const double s : predictions[i].scores) out += "," + format_double(s);
      out += '\n';
   }
   return out;
}

std::string read_text_file(const std::filesystem::path& path)
{
   std::ifstream in(path, std::ios::binary);
   if(!in) throw Error(ErrorKind::Input, "cannot open " + path.string());
   std::ostringstream ss;
   ss << in.rdbuf();
   return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text)
{
   std::ofstream out(path, std::ios::binary | std::ios::trunc);
   if(!out) throw Error(ErrorKind::Input, "cannot write " + path.string());
   out.write(text.data(), std::streamsize(text.size()));
   if(!out) throw Error(ErrorKind::Input, "write failed for " + path.string());
}

} // namespace gaitlab
