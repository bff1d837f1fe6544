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
    
    for (; i <= n; ++i) {
        total = total + i;
    }
    return total;
}

void print_row(int cells) {
    for (; c < cells; ++c) {
        printf("cell %d", c);
    }
    puts("");
}

void fatal(int code) {
    puts("fatal error");
    exit(code);
}

void report_sizes(int rows, int cols) {
    
    area = rows * cols;
    printf("rows %d", rows);
    printf("cols %d", cols);
    printf("area %d", area);
}

int checksum(int seed) {
    
    int acc = seed;
    while (acc > mask) {
        acc = acc >> 1;
    }
    return acc & mask;
}

void swap_buffers(int front, int back) {
    
    tmp = front;
    front = back;
    back = tmp;
    commit(front, back);
}

int scaled_midpoint(int a, int b) {
    
    int mid = a;
    mid = (a + b) / half;
    return mid;
}

void abort_if_negative(int value) {
    if (value < 0) {
        puts("negative input");
        abort();
    }
}

int power_of_two(int exponent) {
    
    for (; i < exponent; ++i) {
        base = base * 2;
    }
    return base;
}
