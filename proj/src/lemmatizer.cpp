// Copyright 2026 The gencqa Authors
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

#include "gencqa/lemmatizer.hpp"

#include <string>
#include <unordered_map>
#include <unordered_set>

namespace gencqa {
namespace {

constexpr std::size_t kMinStem = 3;

const std::unordered_map<std::string, std::string>& exceptions() {
  static const std::unordered_map<std::string, std::string> table = {
      // irregular plurals
      {"children", "child"}, {"men", "man"}, {"women", "woman"}, {"people", "person"},
      {"feet", "foot"}, {"teeth", "tooth"}, {"geese", "goose"}, {"mice", "mouse"},
      {"lice", "louse"}, {"oxen", "ox"}, {"dice", "die"}, {"knives", "knife"},
      {"wives", "wife"}, {"lives", "life"}, {"leaves", "leaf"}, {"loaves", "loaf"},
      {"wolves", "wolf"}, {"shelves", "shelf"}, {"halves", "half"}, {"calves", "calf"},
      {"thieves", "thief"}, {"scarves", "scarf"}, {"elves", "elf"}, {"selves", "self"},
      {"potatoes", "potato"}, {"tomatoes", "tomato"}, {"heroes", "hero"}, {"echoes", "echo"},
      {"cacti", "cactus"}, {"fungi", "fungus"}, {"data", "datum"}, {"criteria", "criterion"},
      {"phenomena", "phenomenon"}, {"indices", "index"}, {"matrices", "matrix"},
      {"analyses", "analysis"}, {"crises", "crisis"}, {"theses", "thesis"},
      {"buses", "bus"}, {"gases", "gas"}, {"lenses", "lens"}, {"movies", "movie"},
      {"cookies", "cookie"}, {"pies", "pie"}, {"ties", "tie"}, {"lies", "lie"},
      {"brownies", "brownie"}, {"zombies", "zombie"}, {"hippies", "hippie"},
      {"houses", "house"}, {"horses", "horse"}, {"nurses", "nurse"}, {"purses", "purse"},
      {"courses", "course"}, {"cheeses", "cheese"}, {"vases", "vase"}, {"noses", "nose"},
      {"roses", "rose"}, {"hoses", "hose"}, {"cases", "case"}, {"bases", "base"},
      {"phases", "phase"}, {"causes", "cause"}, {"uses", "use"}, {"clauses", "clause"},
      {"pauses", "pause"}, {"blouses", "blouse"}, {"spouses", "spouse"}, {"doses", "dose"},
      {"purchases", "purchase"}, {"vegetables", "vegetable"},
      // irregular verbs
      {"is", "be"}, {"are", "be"}, {"was", "be"}, {"were", "be"}, {"been", "be"}, {"am", "be"},
      {"has", "have"}, {"had", "have"}, {"does", "do"}, {"did", "do"}, {"done", "do"},
      {"went", "go"}, {"gone", "go"}, {"goes", "go"}, {"ate", "eat"}, {"eaten", "eat"},
      {"ran", "run"}, {"saw", "see"}, {"seen", "see"}, {"took", "take"}, {"taken", "take"},
      {"gave", "give"}, {"given", "give"}, {"made", "make"}, {"came", "come"}, {"got", "get"},
      {"gotten", "get"}, {"bought", "buy"}, {"brought", "bring"}, {"thought", "think"},
      {"caught", "catch"}, {"taught", "teach"}, {"found", "find"}, {"kept", "keep"},
      {"left", "leave"}, {"lost", "lose"}, {"paid", "pay"}, {"said", "say"}, {"sold", "sell"},
      {"told", "tell"}, {"wore", "wear"}, {"worn", "wear"}, {"wrote", "write"},
      {"written", "write"}, {"drove", "drive"}, {"driven", "drive"}, {"drank", "drink"},
      {"drunk", "drink"}, {"sang", "sing"}, {"sung", "sing"}, {"swam", "swim"},
      {"began", "begin"}, {"begun", "begin"}, {"broke", "break"}, {"broken", "break"},
      {"chose", "choose"}, {"chosen", "choose"}, {"fell", "fall"}, {"fallen", "fall"},
      {"flew", "fly"}, {"flown", "fly"}, {"forgot", "forget"}, {"forgotten", "forget"},
      {"knew", "know"}, {"known", "know"}, {"slept", "sleep"}, {"spent", "spend"},
      {"stole", "steal"}, {"stolen", "steal"}, {"threw", "throw"}, {"thrown", "throw"},
      {"woke", "wake"}, {"won", "win"}, {"felt", "feel"}, {"met", "meet"}, {"sat", "sit"},
      {"stood", "stand"}, {"understood", "understand"}, {"built", "build"}, {"sent", "send"},
      {"held", "hold"}, {"heard", "hear"}, {"meant", "mean"}, {"led", "lead"}, {"fed", "feed"},
      {"hid", "hide"}, {"hidden", "hide"}, {"rode", "ride"}, {"ridden", "ride"},
      {"shook", "shake"}, {"spoke", "speak"}, {"spoken", "speak"}, {"grew", "grow"},
      {"grown", "grow"}, {"drew", "draw"}, {"drawn", "draw"}, {"blew", "blow"},
      {"dying", "die"}, {"lying", "lie"}, {"tying", "tie"},
      // invariant words the suffix rules would otherwise damage
      {"clothes", "clothes"}, {"glasses", "glasses"}, {"pants", "pants"}, {"jeans", "jeans"},
      {"shorts", "shorts"}, {"scissors", "scissors"}, {"news", "news"}, {"series", "series"},
      {"species", "species"}, {"christmas", "christmas"}, {"always", "always"},
      {"perhaps", "perhaps"}, {"sometimes", "sometimes"}, {"afterwards", "afterwards"},
      {"towards", "towards"}, {"thanks", "thanks"}, {"politics", "politics"},
      {"physics", "physics"}, {"mathematics", "mathematics"}, {"economics", "economics"},
      {"electronics", "electronics"}, {"athletics", "athletics"}, {"gymnastics", "gymnastics"},
      {"something", "something"}, {"anything", "anything"}, {"nothing", "nothing"},
      {"everything", "everything"}, {"thing", "thing"}, {"morning", "morning"},
      {"evening", "evening"}, {"ceiling", "ceiling"}, {"wedding", "wedding"},
      {"clothing", "clothing"}, {"king", "king"}, {"ring", "ring"}, {"string", "string"},
      {"spring", "spring"}, {"wing", "wing"}, {"sibling", "sibling"}, {"pudding", "pudding"},
      {"icing", "icing"}, {"stuffing", "stuffing"}, {"building", "building"},
      {"meeting", "meeting"}, {"painting", "painting"}, {"feeling", "feeling"},
      {"earring", "earring"}, {"swing", "swing"}, {"bring", "bring"}, {"ending", "ending"},
      {"during", "during"}, {"ping", "ping"}, {"sing", "sing"}, {"sting", "sting"},
      {"bed", "bed"}, {"red", "red"}, {"shed", "shed"}, {"hundred", "hundred"},
      {"sacred", "sacred"}, {"naked", "naked"}, {"wicked", "wicked"}, {"beloved", "beloved"},
      {"kindred", "kindred"}, {"wretched", "wretched"},
  };
  return table;
}

bool is_vowel(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; }

bool is_consonant(char c) { return c >= 'a' && c <= 'z' && !is_vowel(c); }

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

// Restores the base form of a stem left by stripping -ing or -ed.
std::string repair_verb_stem(std::string stem) {
  const std::size_t n = stem.size();
  if (n >= 2 && stem[n - 1] == stem[n - 2] && is_consonant(stem[n - 1]) && stem[n - 1] != 'l' &&
      stem[n - 1] != 's' && stem[n - 1] != 'z' && stem[n - 1] != 'f') {
    stem.pop_back();  // running -> run, stopped -> stop
    return stem;
  }
  // Short consonant-vowel-consonant stems usually dropped a silent e:
  // making -> make, baked -> bake.
  if (n == 3 && is_consonant(stem[0]) && is_vowel(stem[1]) && is_consonant(stem[2]) &&
      stem[2] != 'w' && stem[2] != 'x' && stem[2] != 'y') {
    stem.push_back('e');
  }
  return stem;
}

}  // namespace

std::string lemmatize(std::string_view token) {
  std::string word(token);
  if (auto it = exceptions().find(word); it != exceptions().end()) return it->second;

  const std::size_t n = word.size();
  if (ends_with(word, "ies") && n - 3 >= kMinStem) {
    return word.substr(0, n - 3) + "y";
  }
  if (ends_with(word, "sses") || ends_with(word, "xes") || ends_with(word, "zes") ||
      ends_with(word, "ches") || ends_with(word, "shes")) {
    if (n - 2 >= kMinStem) return word.substr(0, n - 2);
  }
  if (ends_with(word, "s") && !ends_with(word, "ss") && !ends_with(word, "us") &&
      !ends_with(word, "is") && n - 1 >= kMinStem) {
    return word.substr(0, n - 1);
  }
  if (ends_with(word, "ing") && n - 3 >= kMinStem) {
    const std::string stem = word.substr(0, n - 3);
    bool has_vowel = false;
    for (char c : stem) has_vowel = has_vowel || is_vowel(c) || c == 'y';
    if (has_vowel) return repair_verb_stem(stem);
  }
  if (ends_with(word, "ed") && !ends_with(word, "eed") && n - 2 >= kMinStem) {
    if (ends_with(word, "ied") && n - 3 >= kMinStem - 1) return word.substr(0, n - 3) + "y";
    const std::string stem = word.substr(0, n - 2);
    bool has_vowel = false;
    for (char c : stem) has_vowel = has_vowel || is_vowel(c) || c == 'y';
    if (has_vowel) return repair_verb_stem(stem);
  }
  return word;
}

}  // namespace gencqa
