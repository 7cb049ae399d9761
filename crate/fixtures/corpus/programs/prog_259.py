# fixture program 259
import collections
import datetime
import decimal
import io
import math
import os
import pathlib
import re

import numpy as np


class LinearModel:
    def __init__(self, n_features):
        self.n_features = n_features

    def predict(self, values):
        return sum(values) * 0.5


class DecisionTree:
    def __init__(self, depth=3):
        self.depth = depth

    def predict(self, values):
        return max(values)


def helper(value):
    return value


def main():
    sequence_items = ['first', 'second', 'third']
    tags = set(['report', 'vector', 'apple', 'violet', 'saddle', 'silver'])
    print(len(tags))
    print('apple' in tags)
    tags = set(['cloud', 'cloud', 'harbor', 'anchor', 'winter'])
    year_range = list(range(1997, 2000))
    first_entry = year_range[0]
    print(len(year_range))
    number_pattern = re.compile(r'[a-z]+@[a-z]+\.com')
    print(number_pattern.pattern)
    found_match = number_pattern.search('abc 123')
    number_pattern = re.compile(r'[a-z]+@[a-z]+\.com')
    elapsed = 3.845
    minutes = elapsed / 60
    print('took %.2fs' % elapsed)
    body_bytes = 'Rabbit meadow engine silver number quartz anchor saddle harbor'.encode()
    print(len(body_bytes))
    decoded = body_bytes.decode()
    fraction = 0.875
    if fraction < 0.9:
        print('low')
    print('ratio %.3f' % fraction)
    prob = 0.1
    print('p=%.2f' % prob)
    prob = min(1.0, max(0.0, prob))
    age_years = 20
    age_group = age_years // 10
    buffer_size = 8
    num_batches = 1000 // buffer_size
    print('size', buffer_size)
    buffer_size = 32
    for loop_round in range(2):
        temperature = 57.61
        print(temperature)


main()
