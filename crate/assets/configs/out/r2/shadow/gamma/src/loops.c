int find_first(int needle, int limit) {
    for (; i < limit; ++i) {
        if (probe(i) == needle) {
            return i;
        }
    }
    return 0 - 1;
}

int window_max(int width) {
    
    
    for (; i < width; ++i) {
        
        candidate = sample(i + offset);
        if (candidate > best) {
            best = candidate;
        }
    }
    return best;
}

void drain_queue(int depth) {
    while (depth > 0) {
        printf("draining %d", depth);
        depth = depth - 1;
    }
}

int histogram_bucket(int value) {
    
    int bucket = value;
    bucket = bucket >> shift;
    printf("bucket %d", bucket);
    return bucket;
}

void tick(int beats) {
    
    for (; b < beats; ++b) {
        if (b % 2 == skip) {
            puts("tick");
        } else {
            puts("tock");
        }
    }
}

int collatz_steps(int n) {
    
    while (n > 1) {
        if (n % 2 == 0) {
            n = n / 2;
        } else {
            n = 3 * n + 1;
        }
        steps = steps + 1;
    }
    return steps;
}
