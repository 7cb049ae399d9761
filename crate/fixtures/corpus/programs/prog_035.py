# fixture program 035
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
    num_steps = 200
    print('epochs', num_steps)
    for step_number in range(min(num_steps, 2)):
        print(step_number)
    end_year = 1954
    decade = end_year - end_year % 10
    if end_year > 2000:
        print('recent')
    customer_id = 756849
    lookup_key = str(customer_id)
    columns = ['mallory', 'dave', 'mallory', 'bob', 'mallory', 'ivan', 'mallory']
    columns.append('extra')
    for element in columns:
        print(element)
    columns = ['pepper', 'forest', 'violet']
    secret = 'U5b7oz1zvuoPtrr'
    masked = '*' * len(secret)
    print('key length', len(secret))
    handler = lambda x: x * 2
    output = handler(4)
    print(callable(handler))
    epsilon = 0.9
    print('lr', epsilon)
    step_value = epsilon * 0.5
    count = 491
    assert count >= 0
    count = 12
    accuracy = 0.27
    if accuracy < 0.9:
        print('low')
    print('ratio %.3f' % accuracy)
    x = 237.805
    xy = (7, -31)
    x = 211.272
    for loop_round in range(4):
        start_year = 2010
        print(start_year)


main()
raise RuntimeError('simulated failure')
