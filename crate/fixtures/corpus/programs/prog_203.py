# fixture program 203
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
    mode = 'red'
    print('mode', mode)
    customer = {'name': 'Alice Forest', 'age': 88, 'city': 'paris'}
    customer['age'] += 1
    print(customer['name'])
    customer = {'name': 'Warsaw', 'age': 81, 'city': 'prague'}
    longitude = 108.809
    print('measured', longitude)
    rounded = round(longitude, 1)
    email = 'bob.pepper@market.com'
    print('mail to', email)
    parent = None
    if parent is None:
        print('empty')
    number_pattern = re.compile(r'[a-z]+@[a-z]+\.com')
    found_match = number_pattern.search('abc 123')
    print(number_pattern.pattern)
    image_size = (224, 64)
    width, height = image_size
    print('size', image_size)
    image_size = (32, 480)
    attribute = 'dragon'
    lookup = {attribute: 0}
    print('column', attribute)
    attribute = 'planet_id'
    row_count = 284
    row_count += 1
    row_count = 44575
    password = 'cbjRG6UlvYEHp1JkyPFNX0jWRJmfqK3x'
    masked = '*' * len(password)
    seen_ids = {247, 138}
    print(len(seen_ids))
    activation = math.sqrt
    output = activation(4)
    root_dir = pathlib.Path('/tmp/market')
    target_file = root_dir / 'out.csv'
    birthday = '1996-08-01'
    print('date', birthday)
    year_part = birthday[:4]
    periods = list(range(1991, 1993))
    first_entry = periods[0]
    tmp = 'Matrix pepper vector engine number wizard vector!'
    s = 'Signal quartz island vector meadow python python matrix forest?'
    i = 56
    for loop_round in range(3):
        altitude = 77.0
        print(altitude)


main()
