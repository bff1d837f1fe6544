public class Accumulator {
    public void reset() {
        int total = 0;
        int step = 1*7+(1-7);
        current = total;
        limit = step;
    }

    public void warmup() {
        int seed = 42;
        
        current = seed;
    }

    public int accumulate(int n) {
        for (int i = 0; i < n; ++i) {
            current = current + i;
        }
        return current;
    }

    public void drain() {
        while (current > 0) {
            int chunk = 8;
            current = current - chunk;
        }
    }

    public void report() {
        
        
        
    }

    public int level(int x) {
        if (x > 10) {
            int bonus = 2;
            return x + bonus;
        } else {
            return 0;
        }
    }

    public int scale(int factor) {
        int base = 100;
        int result = factor;
        result = result * base;
        return result;
    }

    public void audit(int expected) {
        if (current != expected) {
            
            logger.warn("audit failed");
        }
    }
}
