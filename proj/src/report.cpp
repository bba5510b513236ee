#include "nklab/report.hpp"

#include <cinttypes>
#include <cstdio>

namespace nk::rep {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (const char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

void JsonWriter::comma() {
  if (pending_key_) {
    pending_key_ = false;
    return;
  }
  if (!first_.empty()) {
    if (!first_.back()) out_ += ',';
    first_.back() = false;
  }
}

void JsonWriter::literal(const std::string& s) {
  comma();
  out_ += s;
}

void JsonWriter::begin_object() {
  comma();
  out_ += '{';
  first_.push_back(true);
}

void JsonWriter::end_object() {
  out_ += '}';
  first_.pop_back();
}

void JsonWriter::begin_array() {
  comma();
  out_ += '[';
  first_.push_back(true);
}

void JsonWriter::end_array() {
  out_ += ']';
  first_.pop_back();
}

void JsonWriter::key(const std::string& k) {
  comma();
  out_ += '"';
  out_ += escape(k);
  out_ += "\":";
  pending_key_ = true;
}

void JsonWriter::value(const std::string& v) { literal('"' + escape(v) + '"'); }
void JsonWriter::value(const char* v) { value(std::string(v)); }
void JsonWriter::value(double v) { literal(format_double(v)); }
void JsonWriter::value(int64_t v) { literal(std::to_string(v)); }
void JsonWriter::value(uint64_t v) { literal(std::to_string(v)); }
void JsonWriter::value(bool v) { literal(v ? "true" : "false"); }

namespace {

void write_checks(JsonWriter& w, const std::vector<suites::CheckRecord>& checks) {
  w.begin_array();
  for (const auto& c : checks) {
    w.begin_object();
    w.key("name");
    w.value(c.name);
    w.key("min");
    w.value(c.min);
    w.key("mean");
    w.value(c.mean);
    w.key("max");
    w.value(c.max);
    w.key("threshold");
    w.value(c.threshold);
    w.key("kind");
    switch (c.kind) {
      case suites::CheckKind::MaxLe: w.value("max_le"); break;
      case suites::CheckKind::MinGe: w.value("min_ge"); break;
      case suites::CheckKind::Record: w.value("record"); break;
    }
    w.key("pass");
    w.value(c.pass);
    w.end_object();
  }
  w.end_array();
}

void write_surface_samples(JsonWriter& w, const std::vector<suites::SurfaceSample>& v) {
  w.begin_array();
  for (size_t i = 0; i < v.size(); ++i) {
    const auto& s = v[i];
    w.begin_object();
    w.key("index");
    w.value(static_cast<int64_t>(i));
    w.key("params");
    w.begin_array();
    for (int d = 0; d < 5; ++d) w.value(s.params[d]);
    w.end_array();
    w.key("commutator");
    w.value(s.commutator);
    w.key("anticommutator");
    w.value(s.anticommutator);
    w.key("shape_norm");
    w.value(s.shape_norm);
    w.key("eig_spread");
    w.value(s.eig_spread);
    w.key("hopf_defect");
    w.value(s.hopf_defect);
    w.key("codazzi");
    w.value(s.codazzi);
    w.key("hopf_identity");
    w.value(s.hopf_identity);
    w.key("dim_d");
    w.value(static_cast<int64_t>(s.dim_d));
    w.key("a");
    w.value(s.a);
    w.key("b");
    w.value(s.b);
    w.key("c");
    w.value(s.c);
    w.end_object();
  }
  w.end_array();
}

void write_obstruction(JsonWriter& w, const obs::Report& r) {
  w.begin_object();
  w.key("case");
  w.value(r.case_id);
  w.key("subcase");
  w.value(r.subcase);
  w.key("chain");
  w.begin_array();
  for (const auto& f : r.chain) {
    w.begin_object();
    w.key("name");
    w.value(f.name);
    w.key("value");
    w.value(f.value);
    w.key("forced_by");
    w.value(f.reason);
    w.end_object();
  }
  w.end_array();
  w.key("derived");
  w.begin_object();
  for (const auto& [k, v] : r.derived) {
    w.key(k);
    w.value(v);
  }
  w.end_object();
  w.key("margins");
  w.begin_array();
  for (const double m : r.margins) w.value(m);
  w.end_array();
  w.key("margin");
  w.value(r.margin);
  if (r.scan) {
    w.key("scan");
    w.begin_object();
    w.key("grid");
    w.value(static_cast<int64_t>(r.scan->grid));
    w.key("refine");
    w.value(static_cast<int64_t>(r.scan->refine));
    w.key("min");
    w.value(r.scan->min);
    w.key("argmin");
    w.begin_array();
    for (const double x : r.scan->argmin) w.value(x);
    w.end_array();
    w.key("analytic_at_argmin");
    w.value(r.scan->analytic_at_argmin);
    w.end_object();
  }
  w.end_object();
}

}  // namespace

std::string render_report(const RunConfig& cfg,
                          const std::vector<suites::CheckRecord>& checks,
                          const std::vector<suites::SurfaceSample>* surface_samples,
                          const obs::Report* obstruction, bool pass,
                          double wall_time_s) {
  JsonWriter w;
  w.begin_object();
  w.key("command");
  w.value(cfg.command);
  w.key("config");
  w.begin_object();
  w.key("ambient");
  w.value(cfg.ambient);
  w.key("name");
  w.value(cfg.name);
  w.key("case");
  w.value(cfg.case_id);
  w.key("samples");
  w.value(static_cast<int64_t>(cfg.samples));
  w.key("seed");
  w.value(static_cast<uint64_t>(cfg.seed));
  w.key("fd_step");
  w.value(cfg.fd_step);
  w.key("fd_step2");
  w.value(cfg.fd_step2);
  w.key("tol_scale");
  w.value(cfg.tol_scale);
  w.key("grid");
  w.value(static_cast<int64_t>(cfg.grid));
  w.key("refine");
  w.value(static_cast<int64_t>(cfg.refine));
  w.end_object();
  w.key("checks");
  write_checks(w, checks);
  if (surface_samples != nullptr) {
    w.key("samples");
    write_surface_samples(w, *surface_samples);
  }
  if (obstruction != nullptr) {
    w.key("obstruction");
    write_obstruction(w, *obstruction);
  }
  w.key("pass");
  w.value(pass);
  w.key("version");
  w.value(kVersion);
  w.key("wall_time_s");
  w.value(wall_time_s);
  w.end_object();
  std::string out = w.str();
  out += '\n';
  return out;
}

}  // namespace nk::rep
