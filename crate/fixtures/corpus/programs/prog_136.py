# fixture program 136
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
    file_path = 'results/anchor_38.csv'
    extension = os.path.splitext(file_path)[1]
    buffer_stream = io.StringIO('Ladder apple ladder silver rocket.')
    buffer_stream.seek(0)
    first_line = buffer_stream.readline()
    buffer_stream = io.StringIO('Pepper garden rabbit apple ladder')
    number_pattern = re.compile(r'^\s*#')
    found_match = number_pattern.search('abc 123')
    print(number_pattern.pattern)
    employee = {'name': 'Carol Pepper', 'age': 26, 'city': 'prague'}
    print(employee['name'])
    employee['age'] += 1
    predictions = np.round(np.linspace(0, 1, 11), 3)
    print(predictions.shape)
    predictions = predictions + 1
    shuffle = False
    if not shuffle:
        print('no')
    shuffle = False
    background = (89, 191, 99)
    red_channel = background[0]
    price = 773.54
    print('price: $%.2f' % price)
    tax = price * 0.19
    price = 4324.0
    person_age = 44
    print('age', person_age)
    if person_age >= 18:
        print('adult')
    proba = 0.686
    proba = min(1.0, max(0.0, proba))
    print('p=%.2f' % proba)
    proba = 0.8
    numbers_range = range(5, 49)
    print(list(numbers_range)[:3])
    feature_name = 'planet_id'
    print('column', feature_name)
    feature_name = 'engine_id'
    end_date = '1999-10-22'
    year_part = end_date[:4]
    end_date = '1992-08-21'
    for loop_round in range(2):
        height = 125.52
        print(height)


main()
