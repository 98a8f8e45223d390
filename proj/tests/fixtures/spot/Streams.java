package spot;

import java.util.List;
import java.util.Optional;
import java.util.stream.Collectors;

class Streams {
  List<String> names(List<String> in) {
    Optional<String> first = in.stream().filter(s -> s.isEmpty()).findFirst();
    long n = in.stream().map(String::trim).count();
    return in.stream().sorted().collect(Collectors.toList());
  }
}
