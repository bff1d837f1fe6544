int clamp(int v, int lo, int hi) {
    if (v < lo) {
        return lo;
    }
    if (v > hi) {
        return hi;
    }
    return v;
}

int sum_upto(int n) {
    int total = 0;
    for (int i = 1; i <= n; ++i) {
        total = total + i;
    }
    return total;
}

void print_row(int cells) {
    for (int c = 0; c < cells; ++c) {
        
    }
    
}

void fatal(int code) {
    
    exit(code);
}

void report_sizes(int rows, int cols) {
    int area = 0;
    area = rows * cols;
    
    
    
}

int checksum(int seed) {
    int mask = 0xFF;
    int acc = seed;
    while (acc > mask) {
        acc = acc >> 1;
    }
    return acc & mask;
}

void swap_buffers(int front, int back) {
    int tmp = 0;
    tmp = front;
    front = back;
    back = tmp;
    commit(front, back);
}

int scaled_midpoint(int a, int b) {
    int half = 2;
    int mid = a;
    mid = (a + b) / half;
    return mid;
}

void abort_if_negative(int value) {
    if (value < 0) {
        
        abort();
    }
}

int power_of_two(int exponent) {
    int base = 1 << 0;
    for (int i = 0; i < exponent; ++i) {
        base = base * 2;
    }
    return base;
}
