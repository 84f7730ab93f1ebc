#include "posmon/report.hpp"

#include <openssl/evp.h>

#include <cstdio>

namespace posmon::cli {

  std::string presentation_sha(Presentation const& p) {
    auto const    text = to_text(p);
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int  len = 0;
    if (EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr)
        != 1) {
      throw Error("SHA-256 digest failed");
    }
    std::string hex;
    char        buf[3];
    for (unsigned int i = 0; i < len; ++i) {
      std::snprintf(buf, sizeof(buf), "%02x", md[i]);
      hex += buf;
    }
    return hex;
  }

  json tokens(word_type const& w, Alphabet const& alphabet) {
    return word_tokens(w, alphabet);
  }

  json tokens(std::vector<word_type> const& ws, Alphabet const& alphabet) {
    json out = json::array();
    for (auto const& w : ws) {
      out.push_back(tokens(w, alphabet));
    }
    return out;
  }

  json Report::to_json() const {
    json j;
    j["command"]          = command;
    j["presentation_sha"] = presentation_sha.empty() ? json(nullptr)
                                                     : json(presentation_sha);
    j["result"]           = result;
    j["bounds"]           = bounds;
    j["truncated"]        = truncated;
    j["elapsed_ms"]       = elapsed_ms;
    if (error) {
      j["error"] = *error;
    }
    return j;
  }

}  // namespace posmon::cli
