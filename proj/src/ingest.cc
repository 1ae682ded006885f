// Copyright 2026 The wikidispute Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "wikidispute/ingest.h"

#include <arpa/inet.h>
#include <openssl/evp.h>

#include <memory>
#include <set>

#include "wikidispute/wikitext.h"

namespace wikidispute {

const char* HistorySourceName(HistorySource source) {
  switch (source) {
    case HistorySource::kApi:
      return "api";
    case HistorySource::kDump:
      return "dump";
    case HistorySource::kFixture:
      return "fixture";
  }
  return "fixture";
}

std::optional<HistorySource> ParseHistorySource(std::string_view name) {
  if (name == "api") return HistorySource::kApi;
  if (name == "dump") return HistorySource::kDump;
  if (name == "fixture") return HistorySource::kFixture;
  return std::nullopt;
}

bool IsIpAddress(std::string_view user) {
  if (user.empty() || user.size() > INET6_ADDRSTRLEN) return false;
  std::string s(user);
  unsigned char buf[sizeof(struct in6_addr)];
  return inet_pton(AF_INET, s.c_str(), buf) == 1 ||
         inet_pton(AF_INET6, s.c_str(), buf) == 1;
}

std::string TextHash(std::string_view text) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(),
                                                              &EVP_MD_CTX_free);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha1(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), text.data(), text.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest, &len) != 1) {
    throw std::runtime_error("SHA-1 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(len * 2);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xf]);
  }
  return out;
}

void FinalizeRevision(RawRevision& rev) {
  rev.text_hash = TextHash(rev.wikitext);
  rev.is_ip_user = IsIpAddress(rev.user);
}

std::string NormalizeTitle(std::string_view title) {
  return CanonicalizeTarget(title);
}

std::string ValidateHistory(const ArticleHistory& history) {
  std::set<int64_t> seen;
  for (size_t i = 0; i < history.revisions.size(); ++i) {
    const RawRevision& rev = history.revisions[i];
    if (rev.rev_id <= 0) {
      return "revision at position " + std::to_string(i) +
             " has a non-positive id";
    }
    if (!seen.insert(rev.rev_id).second) {
      return "duplicate revision id " + std::to_string(rev.rev_id);
    }
    if (i > 0) {
      if (rev.timestamp < history.revisions[i - 1].timestamp) {
        return "revision " + std::to_string(rev.rev_id) +
               " is older than its predecessor";
      }
      if (rev.parent_id != 0 && !seen.contains(rev.parent_id)) {
        return "revision " + std::to_string(rev.rev_id) +
               " has unknown parent " + std::to_string(rev.parent_id);
      }
    }
  }
  return {};
}

}  // namespace wikidispute
