# fixture program 143
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
    person_age = 83
    print('age', person_age)
    if person_age >= 18:
        print('adult')
    weights_list = [12.39, 96.4, 63.41, 71.05, 37.02, 0.89, 82.5, 45.36, 8.57, 99.71]
    weights_list.sort()
    mean_val = sum(weights_list) / len(weights_list)
    weights_list = [78.54, 3.31, 95.09, 39.93, 33.47, 73.3, 25.4]
    row_count = 71310
    if row_count > 10:
        print('many')
    date_str = '1999-11-15'
    print('date', date_str)
    input_files = ['/tmp/pepper_47.tsv', 'output/garden_1.tsv']
    for element in input_files:
        print(os.path.basename(element))
    lookup_table = collections.Counter({})
    for dict_key in lookup_table:
        print(dict_key)
    lookup_table = {'island': 9, 'river': 25, 'rocket': 1, 'rocket': 17}
    height = 165.0
    rounded = round(height, 1)
    print('measured', height)
    content_text = 'Meadow ocean python planet castle dragon butter planet ocean?'
    word_list = content_text.split()
    access_token = 'hwyOV7F06kucwAMcVZgAG7Xj5qD'
    masked = '*' * len(access_token)
    access_token = 'YTpBPC9uA7v7u'
    exact_amount = decimal.Decimal('5765.76')
    print('balance', exact_amount)
    base_url = 'https://winter.io/tunnel/881'
    print('GET', base_url)
    for loop_round in range(3):
        window_size = 4096
        print(window_size)


main()
