package ku;

import javax.batch.api.chunk.ItemReader;

abstract class K28 implements ItemReader {
}
