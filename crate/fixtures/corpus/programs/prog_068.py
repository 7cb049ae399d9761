# fixture program 068
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
    X_test = np.arange(9).reshape(3, 3)
    print(X_test.shape)
    regressor = LinearModel(3)
    prediction = regressor.predict([1, 2, 3])
    print(type(regressor).__name__)
    date_string = '2003-01-08'
    year_part = date_string[:4]
    print('date', date_string)
    options = {'seed': 986248, 'epochs': 20, 'lr': 0.99}
    print(sorted(options.keys()))
    columns = []
    for element in columns:
        print(element)
    items = [('castle', 88), ('rocket', 0), ('falcon', 6)]
    for element in items:
        print(element[0])
    output_file = 'output/jungle_13.log'
    extension = os.path.splitext(output_file)[1]
    order_id = 338075
    print('id', order_id)
    order_id = 204507
    start_year = 2014
    print('year', start_year)
    decade = start_year - start_year % 10
    predictions = np.arange(8)
    predictions = predictions + 1
    year_range = list(range(2008, 2010))
    print(len(year_range))
    first_entry = year_range[0]
    year_range = list(range(1975, 1978))
    selected_ids = {129, 26}
    selected_ids.add(7)
    print(len(selected_ids))
    deadline = datetime.date(2008, 10, 13)
    iso = deadline.isoformat()
    timeout_seconds = 66.103
    minutes = timeout_seconds / 60
    print('took %.2fs' % timeout_seconds)
    timeout_seconds = 42.431
    x = 233.7
    a = 75037
    a = 71
    for loop_round in range(3):
        max_retries = 5
        print(max_retries)


main()
