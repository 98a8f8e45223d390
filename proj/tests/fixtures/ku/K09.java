package ku;

import java.util.function.Function;

class K09 {
  Function<String, Integer> length = String::length;
}
