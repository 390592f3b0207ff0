#include "gaitlab/ingest.hpp"

#include "gaitlab/error.hpp"
#include "gaitlab/table_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace gaitlab {

namespace {

using json = nlohmann::json;

std::string_view trim(std::string_view s)
{
   const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
   while(!s.empty() && is_space(s.front())) s.remove_prefix(1);
   while(!s.empty() && is_space(s.back())) s.remove_suffix(1);
   return s;
}

PoseFrame parse_frame(const json& doc, std::size_t line_no)
{
   if(!doc.is_object()) throw MalformedLine(line_no, "expected an object");

   const auto frame_it = doc.find("frame");
   if(frame_it == doc.end() || !frame_it->is_number_integer())
      throw MalformedLine(line_no, "missing integer \"frame\"");
   PoseFrame frame;
   frame.frame_index = frame_it->get<std::int64_t>();
   if(frame.frame_index < 0) throw MalformedLine(line_no, "negative frame index");

   if(const auto t = doc.find("t_ms"); t != doc.end() && !t->is_null()) {
      if(!t->is_number_integer()) throw MalformedLine(line_no, "\"t_ms\" must be an integer");
      frame.timestamp_ms = t->get<std::int64_t>();
   }

   const auto kp_it = doc.find("kp");
   if(kp_it == doc.end() || !kp_it->is_object()) throw MalformedLine(line_no, "missing \"kp\" object");

   for(const auto& [name, value] : kp_it->items()) {
      const auto id = keypoint_from_name(name);
      if(!id) continue;
      if(!value.is_array() || value.size() != 3)
         throw MalformedLine(line_no, "keypoint " + name + " must be [x, y, conf]");
      for(const auto& v : value)
         if(!v.is_number()) throw MalformedLine(line_no, "keypoint " + name + " has a non-number");
      Keypoint kp{value[0].get<double>(), value[1].get<double>(), value[2].get<double>()};
      if(!std::isfinite(kp.x) || !std::isfinite(kp.y))
         throw MalformedLine(line_no, "keypoint " + name + " is not finite");
      if(!(kp.confidence >= 0.0 && kp.confidence <= 1.0))
         throw MalformedLine(line_no, "keypoint " + name + " confidence outside [0,1]");
      frame[*id] = kp;
   }
   return frame;
}

} // namespace

PoseSequence parse_keypoint_jsonl(std::string_view text, std::string source_id)
{
   PoseSequence seq;
   seq.source_id = std::move(source_id);

   std::set<std::int64_t> seen;
   std::size_t line_no = 0;
   while(!text.empty()) {
      ++line_no;
      const auto eol        = text.find('\n');
      const auto line       = trim(text.substr(0, eol));
      text                  = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
      if(line.empty()) continue;

      json doc;
      try {
         doc = json::parse(line);
      } catch(const json::parse_error& e) {
         throw MalformedLine(line_no, e.what());
      }
      auto frame = parse_frame(doc, line_no);
      if(!seen.insert(frame.frame_index).second) throw DuplicateFrame(frame.frame_index);
      seq.frames.push_back(std::move(frame));
   }
   if(seq.frames.empty()) throw EmptyInput();

   std::stable_sort(seq.frames.begin(), seq.frames.end(), [](const auto& a, const auto& b) {
      return a.frame_index < b.frame_index;
   });
   return seq;
}

std::string source_id_from_path(const std::filesystem::path& path)
{
   std::string name               = path.filename().string();
   constexpr std::string_view ext = ".kp.jsonl";
   if(name.size() > ext.size() && name.ends_with(ext)) return name.substr(0, name.size() - ext.size());
   return path.stem().string();
}

PoseSequence read_keypoint_file(const std::filesystem::path& path)
{
   return parse_keypoint_jsonl(read_text_file(path), source_id_from_path(path));
}

std::string serialize_keypoint_jsonl(const PoseSequence& seq)
{
   std::string out;
   for(const auto& frame : seq.frames) {
      nlohmann::ordered_json doc;
      doc["frame"] = frame.frame_index;
      if(frame.timestamp_ms) doc["t_ms"] = *frame.timestamp_ms;
      auto& kps = doc["kp"] = nlohmann::ordered_json::object();
      for(const auto id : all_keypoints()) {
         if(const auto& kp = frame[id]) kps[std::string(keypoint_name(id))] = {kp->x, kp->y, kp->confidence};
      }
      out += doc.dump();
      out += '\n';
   }
   return out;
}

void write_keypoint_file(const std::filesystem::path& path, const PoseSequence& seq)
{
   write_text_file(path, serialize_keypoint_jsonl(seq));
}

std::pair<PoseSequence, IngestReport>
filter_valid(const PoseSequence& seq, double min_confidence, std::size_t min_valid_frames)
{
   if(min_valid_frames < 1) throw std::invalid_argument("min_valid_frames must be >= 1");
   PoseSequence kept;
   kept.source_id = seq.source_id;
   for(const auto& f : seq.frames)
      if(frame_is_valid(f, min_confidence)) kept.frames.push_back(f);

   IngestReport report;
   report.source_id      = seq.source_id;
   report.total_frames   = seq.frames.size();
   report.valid_frames   = kept.frames.size();
   report.dropped_frames = report.total_frames - report.valid_frames;

   if(report.valid_frames < min_valid_frames) throw TooFewValidFrames(report.valid_frames, min_valid_frames);
   return {std::move(kept), report};
}

} // namespace gaitlab
