// Copyright 2026 The VGF Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vgf/config.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace vgf {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, sep)) out.push_back(trim(part));
  return out;
}

uint64_t parse_u64(const std::string& v, const std::string& key) {
  try {
    size_t pos = 0;
    uint64_t r = (v.rfind("0x", 0) == 0) ? std::stoull(v.substr(2), &pos, 16)
                                         : std::stoull(v, &pos, 10);
    std::string rest = (v.rfind("0x", 0) == 0) ? v.substr(2 + pos) : v.substr(pos);
    if (!trim(rest).empty()) throw std::invalid_argument(v);
    return r;
  } catch (const std::exception&) {
    throw ConfigParseError("bad integer for '" + key + "': " + v);
  }
}

bool parse_bool(const std::string& v, const std::string& key) {
  if (v == "on" || v == "true" || v == "1") return true;
  if (v == "off" || v == "false" || v == "0") return false;
  throw ConfigParseError("bad flag for '" + key + "': " + v);
}

struct Builder {
  const Design& design;
  HarnessConfig cfg;
  std::vector<std::string> clock_order;
  std::vector<std::string> reset_order;
  std::vector<std::string> domain_order;
  // domain -> clock name (resolved at finish, clocks may appear later)
  std::vector<std::optional<std::string>> domain_clock_names;

  explicit Builder(const Design& d) : design(d) {}

  SignalId resolve_signal(const std::string& name, const std::string& key) {
    auto id = design.find_signal(name);
    if (!id) throw UnknownSignal("config '" + key + "': unknown signal '" + name + "'");
    return *id;
  }

  SignalId resolve_input(const std::string& name, const std::string& key) {
    SignalId id = resolve_signal(name, key);
    if (design.signals[id].kind != SignalKind::input)
      throw ConfigParseError("config '" + key + "': '" + name + "' is not an input");
    return id;
  }

  ClockSpec& clock(const std::string& name) {
    for (size_t i = 0; i < cfg.clocks.size(); ++i)
      if (cfg.clocks[i].name == name) return cfg.clocks[i];
    ClockSpec c;
    c.name = name;
    c.stable_after = 0;  // resolved to one period at finish when unset
    cfg.clocks.push_back(c);
    clock_order.push_back(name);
    return cfg.clocks.back();
  }

  ResetSpec& reset(const std::string& name) {
    for (size_t i = 0; i < cfg.resets.size(); ++i)
      if (cfg.resets[i].name == name) return cfg.resets[i];
    ResetSpec r;
    r.name = name;
    cfg.resets.push_back(r);
    reset_order.push_back(name);
    return cfg.resets.back();
  }

  InputDomain& domain(const std::string& name) {
    for (size_t i = 0; i < cfg.domains.size(); ++i)
      if (cfg.domains[i].name == name) return cfg.domains[i];
    InputDomain d;
    d.name = name;
    cfg.domains.push_back(d);
    domain_order.push_back(name);
    domain_clock_names.push_back(std::nullopt);
    return cfg.domains.back();
  }

  void line(const std::string& key, const std::string& value) {
    std::vector<std::string> path = split(key, '.');
    if (path.empty()) throw ConfigParseError("empty key");
    const std::string& section = path[0];

    if (section == "clock" && path.size() == 3) {
      ClockSpec& c = clock(path[1]);
      const std::string& k = path[2];
      if (k == "signal") c.signal = resolve_input(value, key);
      else if (k == "period") c.period = static_cast<uint32_t>(parse_u64(value, key));
      else if (k == "phase") c.phase = static_cast<uint32_t>(parse_u64(value, key));
      else if (k == "duty") {
        auto parts = split(value, '/');
        if (parts.size() != 2) throw ConfigParseError("duty must be 'num/den': " + key);
        c.duty_num = static_cast<uint32_t>(parse_u64(parts[0], key));
        c.duty_den = static_cast<uint32_t>(parse_u64(parts[1], key));
        if (c.duty_den == 0 || c.duty_num == 0 || c.duty_num >= c.duty_den)
          throw ConfigParseError("duty must be a rational in (0,1): " + key);
      } else if (k == "differential") c.differential_pin = resolve_input(value, key);
      else if (k == "stable_signal") c.stable_signal = resolve_input(value, key);
      else if (k == "stable_after") c.stable_after = parse_u64(value, key);
      else throw ConfigParseError("unknown clock key: " + key);
      return;
    }
    if (section == "reset" && path.size() == 3) {
      ResetSpec& r = reset(path[1]);
      const std::string& k = path[2];
      if (k == "signal") r.signal = resolve_input(value, key);
      else if (k == "active") {
        if (value == "high") r.active_high = true;
        else if (value == "low") r.active_high = false;
        else throw ConfigParseError("reset active must be high|low: " + key);
      } else if (k == "style") {
        if (value == "sync" || value == "synchronous") r.synchronous = true;
        else if (value == "async" || value == "asynchronous") r.synchronous = false;
        else throw ConfigParseError("reset style must be sync|async: " + key);
      } else throw ConfigParseError("unknown reset key: " + key);
      return;
    }
    if (section == "domain" && path.size() == 3) {
      size_t which = 0;
      {
        domain(path[1]);
        for (size_t i = 0; i < cfg.domains.size(); ++i)
          if (cfg.domains[i].name == path[1]) which = i;
      }
      InputDomain& d = cfg.domains[which];
      const std::string& k = path[2];
      if (k == "clock") {
        if (value == "none") domain_clock_names[which] = std::nullopt;
        else domain_clock_names[which] = value;
      } else if (k == "inputs") {
        for (const std::string& n : split(value, ','))
          d.inputs.push_back(resolve_input(n, key));
      } else if (k == "edge") {
        if (value == "rising") d.drive_edge = EdgeKind::rising;
        else if (value == "falling") d.drive_edge = EdgeKind::falling;
        else throw ConfigParseError("domain edge must be rising|falling: " + key);
      } else throw ConfigParseError("unknown domain key: " + key);
      return;
    }
    if (section == "track" && path.size() == 2) {
      TrackedEntry t;
      t.signal = resolve_signal(path[1], key);
      t.weight = static_cast<uint32_t>(parse_u64(value, key));
      if (t.weight == 0) throw ConfigParseError("weight must be positive: " + key);
      cfg.tracked.push_back(t);
      return;
    }
    if (section == "property" && path.size() == 2) {
      if (!parse_bool(value, key)) return;
      auto idx = design.find_assertion(path[1]);
      if (!idx) throw UnknownSignal("config '" + key + "': unknown property");
      cfg.properties.push_back(*idx);
      return;
    }
    if (section == "compression" && path.size() == 1) {
      if (value == "compress_values") cfg.compression = CompressionKind::compress_values;
      else if (value == "vectorize_values") cfg.compression = CompressionKind::vectorize_values;
      else throw ConfigParseError("unknown compression: " + value);
      return;
    }
    if (section == "compression" && path.size() == 2 && path[1] == "prev_shift") {
      if (value == "whole") cfg.prev_shift = PrevShift::whole_concat;
      else if (value == "value") cfg.prev_shift = PrevShift::value_only;
      else throw ConfigParseError("prev_shift must be whole|value");
      return;
    }
    if (section == "compression" && path.size() == 2 && path[1] == "use_weights") {
      cfg.use_weights = parse_bool(value, key);
      return;
    }
    if (section == "init" && path.size() == 2) {
      SignalId id = resolve_signal(path[1], key);
      if (design.signals[id].kind != SignalKind::reg)
        throw ConfigParseError("init override target must be a register: " + key);
      uint64_t v = parse_u64(value, key);
      cfg.init_overrides.push_back({id, BitVec(design.signals[id].width, v)});
      return;
    }
    if (section == "pll" && path.size() == 2 && path[1] == "reference_period") {
      cfg.reference_period = static_cast<uint32_t>(parse_u64(value, key));
      if (cfg.reference_period < 1) throw ConfigParseError("reference_period must be >= 1");
      return;
    }
    throw ConfigParseError("unknown config key: " + key);
  }

  HarnessConfig finish() {
    // resolve clock geometry
    for (ClockSpec& c : cfg.clocks) {
      if (c.period < 2) throw ConfigParseError("clock '" + c.name + "': period must be >= 2");
      uint64_t ht = (static_cast<uint64_t>(c.period) * c.duty_num + c.duty_den / 2) /
                    c.duty_den;
      if (ht < 1 || ht > c.period - 1)
        throw ConfigParseError("clock '" + c.name + "': duty leaves no high or low time");
      c.high_time = static_cast<uint32_t>(ht);
      if (c.stable_after == 0) c.stable_after = c.period;
    }
    // derive differential pairs: inverted pin, duty 1-h, phase shifted
    // half a period
    size_t base_count = cfg.clocks.size();
    for (size_t i = 0; i < base_count; ++i) {
      ClockSpec base = cfg.clocks[i];
      if (!base.differential_pin) continue;
      ClockSpec inv;
      inv.name = base.name + "_n";
      inv.signal = *base.differential_pin;
      inv.period = base.period;
      inv.duty_num = base.duty_den - base.duty_num;
      inv.duty_den = base.duty_den;
      inv.phase = base.phase + base.period / 2;
      uint64_t ht = (static_cast<uint64_t>(inv.period) * inv.duty_num + inv.duty_den / 2) /
                    inv.duty_den;
      inv.high_time = static_cast<uint32_t>(ht);
      inv.stable_after = base.stable_after;
      inv.derived = true;
      cfg.clocks.push_back(inv);
    }

    // resolve domain clocks
    for (size_t i = 0; i < cfg.domains.size(); ++i) {
      if (!domain_clock_names[i]) continue;
      bool found = false;
      for (size_t k = 0; k < cfg.clocks.size(); ++k) {
        if (cfg.clocks[k].name == *domain_clock_names[i]) {
          cfg.domains[i].clock_index = static_cast<uint32_t>(k);
          found = true;
          break;
        }
      }
      if (!found)
        throw ConfigParseError("domain '" + cfg.domains[i].name +
                               "': unknown clock '" + *domain_clock_names[i] + "'");
    }
    for (InputDomain& d : cfg.domains) {
      d.total_width = 0;
      for (SignalId s : d.inputs) d.total_width += design.signals[s].width;
    }

    // every data input belongs to exactly one domain
    std::set<SignalId> harness_pins;
    for (const ClockSpec& c : cfg.clocks) {
      harness_pins.insert(c.signal);
      if (c.stable_signal) harness_pins.insert(*c.stable_signal);
    }
    for (const ResetSpec& r : cfg.resets) harness_pins.insert(r.signal);
    std::set<SignalId> claimed;
    for (const InputDomain& d : cfg.domains) {
      for (SignalId s : d.inputs) {
        if (harness_pins.count(s))
          throw ConfigParseError("input '" + design.signals[s].name +
                                 "' is harness-driven and cannot join a domain");
        if (!claimed.insert(s).second)
          throw ConfigParseError("input '" + design.signals[s].name +
                                 "' appears in two domains");
      }
    }
    for (const SignalDecl& s : design.signals) {
      if (s.kind != SignalKind::input) continue;
      if (harness_pins.count(s.id) || claimed.count(s.id)) continue;
      throw ConfigParseError("input '" + s.name + "' belongs to no domain");
    }

    if (cfg.properties.empty()) {
      for (uint32_t i = 0; i < design.assertions.size(); ++i)
        cfg.properties.push_back(i);
    }
    if (cfg.properties.empty())
      throw ConfigParseError("no properties: the design declares no assertions");

    std::set<SignalId> seen_tracked;
    for (const TrackedEntry& t : cfg.tracked)
      if (!seen_tracked.insert(t.signal).second)
        throw ConfigParseError("signal '" + design.signals[t.signal].name +
                               "' tracked twice");
    return std::move(cfg);
  }
};

}  // namespace

HarnessConfig load_config(const std::string& text, const Design& d) {
  Builder b(d);
  std::stringstream ss(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(ss, raw)) {
    ++lineno;
    std::string line = raw;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigParseError("line " + std::to_string(lineno) + ": expected key = value");
    b.line(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return b.finish();
}

HarnessConfig load_config_file(const std::string& path, const Design& d) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_config(ss.str(), d);
}

}  // namespace vgf
