public class Accumulator {
    public void reset() {
        
        
        current = total;
        limit = step;
    }

    public void warmup() {
        
        System.out.println("warming up");
        current = seed;
    }

    public int accumulate(int n) {
        for (; i < n; ++i) {
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
        System.out.println("accumulator report");
        System.out.print(current);
        System.err.println("done");
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
        
        int result = factor;
        result = result * base;
        return result;
    }

    public void audit(int expected) {
        if (current != expected) {
            System.out.println("mismatch");
            logger.warn("audit failed");
        }
    }
}
